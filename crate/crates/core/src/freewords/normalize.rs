use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::{reduce_word, Delta1Word, GroupWord, Letter, WordProblemMode};

/// `Σ cᵢ · gᵢγᵢ` with reduced `γᵢ` and nonzero integer `cᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalWord {
    mode: WordProblemMode,
    terms: BTreeMap<(String, GroupWord), BigInt>,
}

impl CanonicalWord {
    pub fn zero(mode: WordProblemMode) -> Self {
        CanonicalWord {
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn mode(&self) -> WordProblemMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Items in display order: generator, then word length, then letters.
    pub fn terms(&self) -> impl Iterator<Item = (&str, &GroupWord, &BigInt)> {
        self.terms.iter().map(|((g, w), c)| (g.as_str(), w, c))
    }

    pub fn coefficient(&self, generator: &str, word: &GroupWord) -> BigInt {
        self.terms
            .get(&(generator.to_string(), word.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn generators(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.terms.keys().map(|(g, _)| g.as_str()).collect();
        out.dedup();
        out
    }

    fn add(&mut self, generator: String, word: GroupWord, c: BigInt) {
        let key = (generator, word);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `self − other`, both in the same mode.
    pub fn difference(&self, other: &CanonicalWord) -> CanonicalWord {
        let mut out = self.clone();
        for ((g, w), c) in &other.terms {
            out.add(g.clone(), w.clone(), -c);
        }
        out
    }

    /// Projection of a free-mode form onto the medial mode.
    pub fn abelianize(&self) -> CanonicalWord {
        let mut out = CanonicalWord::zero(WordProblemMode::Medial);
        for ((g, w), c) in &self.terms {
            out.add(g.clone(), w.abelianize(), c.clone());
        }
        out
    }

    /// Expands back into a Δ₁-word: `c` copies of each atom, negated when
    /// `c < 0`.
    pub fn to_word(&self) -> Delta1Word {
        let mut summands = Vec::new();
        for ((g, w), c) in &self.terms {
            let atom = w
                .letters()
                .into_iter()
                .fold(Delta1Word::gen(g.clone()), |acc, l| Delta1Word::apply(l, acc));
            let atom = if c.is_negative() { Delta1Word::neg(atom) } else { atom };
            let mut k = c.abs();
            while k.is_positive() {
                summands.push(atom.clone());
                k -= BigInt::one();
            }
        }
        summands
            .into_iter()
            .reduce(Delta1Word::plus)
            .unwrap_or(Delta1Word::Zero)
    }
}

impl fmt::Display for CanonicalWord {
    /// `3·x[aab'] - 1·y[]`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((g, w), c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{}·{g}[{w}]", c.abs())?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalWord {
    /// A list of `{generator, word, coefficient}` items in display order;
    /// coefficients are decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Item<'a> {
            generator: &'a str,
            word: String,
            coefficient: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((g, w), c) in &self.terms {
            seq.serialize_element(&Item {
                generator: g,
                word: w.to_string(),
                coefficient: c.to_string(),
            })?;
        }
        seq.end()
    }
}

/// A signed generator under a sequence of automorphisms.
#[derive(Debug, Clone)]
struct Atom {
    negative: bool,
    generator: String,
    letters: Vec<Letter>,
}

/// Step 1: open all brackets, distributing `γ` and `−` over sums.
fn flatten(w: &Delta1Word, out: &mut Vec<Atom>) {
    match w {
        Delta1Word::Gen(g) => out.push(Atom {
            negative: false,
            generator: g.clone(),
            letters: Vec::new(),
        }),
        Delta1Word::Zero => {}
        Delta1Word::Plus(l, r) => {
            flatten(l, out);
            flatten(r, out);
        }
        Delta1Word::Neg(inner) => {
            let start = out.len();
            flatten(inner, out);
            for a in &mut out[start..] {
                a.negative = !a.negative;
            }
        }
        Delta1Word::Apply(g, inner) => {
            let start = out.len();
            flatten(inner, out);
            for a in &mut out[start..] {
                a.letters.push(*g);
            }
        }
    }
}

/// Steps 2–5: reduce words, collect like items, drop zeros; grouping by
/// generator is the map order.
fn collect(atoms: Vec<Atom>, mode: WordProblemMode) -> CanonicalWord {
    let mut out = CanonicalWord::zero(mode);
    for a in atoms {
        let c = if a.negative { -BigInt::one() } else { BigInt::one() };
        out.add(a.generator, reduce_word(&a.letters, mode), c);
    }
    out
}

pub fn normalize(w: &Delta1Word, mode: WordProblemMode) -> CanonicalWord {
    let mut atoms = Vec::new();
    flatten(w, &mut atoms);
    collect(atoms, mode)
}

/// Normalizes by rewriting a uniformly chosen redex at a time, then collects
/// the summands in shuffled order. Agrees with [`normalize`] for every seed.
pub fn normalize_randomized<R: Rng>(w: &Delta1Word, mode: WordProblemMode, rng: &mut R) -> CanonicalWord {
    let mut w = w.clone();
    loop {
        let count = count_redexes(&w, mode);
        if count == 0 {
            break;
        }
        let mut k = Some(rng.random_range(0..count));
        w = rewrite_nth(w, mode, &mut k);
    }
    let mut atoms = Vec::new();
    flatten(&w, &mut atoms);
    atoms.shuffle(rng);
    collect(atoms, mode)
}

/// The single rewrite rule applicable at the root of `w`, if any.
fn root_rewrite(w: &Delta1Word, mode: WordProblemMode) -> Option<Delta1Word> {
    use Delta1Word as W;
    match w {
        W::Apply(g, inner) => match inner.as_ref() {
            W::Plus(a, b) => Some(W::plus(W::apply(*g, (**a).clone()), W::apply(*g, (**b).clone()))),
            W::Neg(a) => Some(W::neg(W::apply(*g, (**a).clone()))),
            W::Zero => Some(W::Zero),
            W::Apply(h, a) if *h == g.inverse() => Some((**a).clone()),
            // automorphisms commute in medial mode; move α-letters inward
            W::Apply(h, a) if mode == WordProblemMode::Medial && *h >= Letter::Beta && *g < Letter::Beta => {
                Some(W::apply(*h, W::apply(*g, (**a).clone())))
            }
            _ => None,
        },
        W::Neg(inner) => match inner.as_ref() {
            W::Plus(a, b) => Some(W::plus(W::neg((**a).clone()), W::neg((**b).clone()))),
            W::Neg(a) => Some((**a).clone()),
            W::Zero => Some(W::Zero),
            _ => None,
        },
        W::Plus(a, b) => match (a.as_ref(), b.as_ref()) {
            (W::Zero, _) => Some((**b).clone()),
            (_, W::Zero) => Some((**a).clone()),
            _ => None,
        },
        W::Gen(_) | W::Zero => None,
    }
}

fn count_redexes(w: &Delta1Word, mode: WordProblemMode) -> usize {
    let here = usize::from(root_rewrite(w, mode).is_some());
    here + match w {
        Delta1Word::Plus(a, b) => count_redexes(a, mode) + count_redexes(b, mode),
        Delta1Word::Neg(a) | Delta1Word::Apply(_, a) => count_redexes(a, mode),
        _ => 0,
    }
}

/// Rewrites the `k`-th redex in pre-order.
/// `k` becomes `None` once the rewrite has happened.
fn rewrite_nth(w: Delta1Word, mode: WordProblemMode, k: &mut Option<usize>) -> Delta1Word {
    let Some(remaining) = *k else { return w };
    if let Some(r) = root_rewrite(&w, mode) {
        if remaining == 0 {
            *k = None;
            return r;
        }
        *k = Some(remaining - 1);
    }
    match w {
        Delta1Word::Plus(a, b) => {
            let a = rewrite_nth(*a, mode, k);
            let b = rewrite_nth(*b, mode, k);
            Delta1Word::plus(a, b)
        }
        Delta1Word::Neg(a) => Delta1Word::neg(rewrite_nth(*a, mode, k)),
        Delta1Word::Apply(g, a) => Delta1Word::apply(g, rewrite_nth(*a, mode, k)),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::tau_transfer;
    use crate::terms::parse_term;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use Letter::*;

    const FREE: WordProblemMode = WordProblemMode::FreeT;

    fn nf(s: &str, mode: WordProblemMode) -> CanonicalWord {
        normalize(&tau_transfer(&parse_term(s).unwrap()), mode)
    }

    #[test]
    fn examples() {
        let w = nf("(x*y)*z", FREE);
        assert_eq!(
            w.coefficient("x", &GroupWord::Free(vec![Alpha, Alpha])),
            BigInt::from(1)
        );
        assert_eq!(w.coefficient("y", &GroupWord::Free(vec![Beta, Alpha])), BigInt::from(1));
        assert_eq!(w.coefficient("z", &GroupWord::Free(vec![Beta])), BigInt::from(1));
        assert_eq!(w.terms().count(), 3);
        assert_eq!(w.to_string(), "1·x[aa] + 1·y[ba] + 1·z[b]");

        assert_eq!(nf("x*(x\\y)", FREE), normalize(&Delta1Word::gen("y"), FREE));
        assert_eq!(nf("x*(x\\y)", FREE).to_string(), "1·y[]");
        assert!(normalize(&Delta1Word::Zero, FREE).is_zero());
        assert_eq!(normalize(&Delta1Word::Zero, FREE).to_string(), "0");
    }

    #[test]
    fn display_signs_and_coefficients() {
        let x = || Delta1Word::gen("x");
        let w = Delta1Word::plus(
            Delta1Word::neg(Delta1Word::gen("y")),
            Delta1Word::plus(
                Delta1Word::apply(BetaInv, Delta1Word::apply(Alpha, Delta1Word::apply(Alpha, x()))),
                Delta1Word::plus(
                    Delta1Word::apply(BetaInv, Delta1Word::apply(Alpha, Delta1Word::apply(Alpha, x()))),
                    Delta1Word::apply(BetaInv, Delta1Word::apply(Alpha, Delta1Word::apply(Alpha, x()))),
                ),
            ),
        );
        assert_eq!(normalize(&w, FREE).to_string(), "3·x[aab'] - 1·y[]");
        assert_eq!(normalize(&Delta1Word::neg(x()), FREE).to_string(), "-1·x[]");
    }

    #[test]
    fn mediality_by_mode() {
        let (l, r) = ("(x*y)*(z*w)", "(x*z)*(y*w)");
        assert_ne!(nf(l, FREE), nf(r, FREE));
        assert_eq!(nf(l, WordProblemMode::Medial), nf(r, WordProblemMode::Medial));
        assert_eq!(
            nf(l, FREE).coefficient("y", &GroupWord::Free(vec![Beta, Alpha])),
            BigInt::from(1)
        );
        assert_eq!(
            nf(r, FREE).coefficient("y", &GroupWord::Free(vec![Alpha, Beta])),
            BigInt::from(1)
        );
    }

    #[test]
    fn expansion_round_trips() {
        for s in ["(x/y)\\(z*u)", "x*(y\\x)", "((x/y)/y)*y"] {
            for mode in [FREE, WordProblemMode::Medial] {
                let w = nf(s, mode);
                assert_eq!(normalize(&w.to_word(), mode), w);
            }
        }
    }

    #[test]
    fn randomized_agrees_on_a_few_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for s in ["((x/y)\\(z*u))/(y*x)", "x\\(y/(z\\(x*y)))"] {
            for mode in [FREE, WordProblemMode::Medial] {
                let w = tau_transfer(&parse_term(s).unwrap());
                assert_eq!(normalize_randomized(&w, mode, &mut rng), normalize(&w, mode));
            }
        }
    }

    #[test]
    fn json_items() {
        let json = serde_json::to_value(nf("x/y", FREE)).unwrap();
        assert_eq!(json[0]["generator"], "x");
        assert_eq!(json[0]["word"], "a'");
        assert_eq!(json[1]["coefficient"], "-1");
    }
}
