use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::WordProblemMode;

/// Automorphism symbols, ordered `α < α⁻¹ < β < β⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Letter {
    Alpha,
    AlphaInv,
    Beta,
    BetaInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::Alpha, Letter::AlphaInv, Letter::Beta, Letter::BetaInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Alpha => Letter::AlphaInv,
            Letter::AlphaInv => Letter::Alpha,
            Letter::Beta => Letter::BetaInv,
            Letter::BetaInv => Letter::Beta,
        }
    }

    /// ASCII spelling: `a`, `a'`, `b`, `b'`.
    pub fn symbol(self) -> &'static str {
        match self {
            Letter::Alpha => "a",
            Letter::AlphaInv => "a'",
            Letter::Beta => "b",
            Letter::BetaInv => "b'",
        }
    }

    fn is_alpha(self) -> bool {
        matches!(self, Letter::Alpha | Letter::AlphaInv)
    }

    fn exponent(self) -> i64 {
        match self {
            Letter::Alpha | Letter::Beta => 1,
            Letter::AlphaInv | Letter::BetaInv => -1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Letter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "α" => Ok(Letter::Alpha),
            "a'" | "α⁻¹" | "α^-1" => Ok(Letter::AlphaInv),
            "b" | "β" => Ok(Letter::Beta),
            "b'" | "β⁻¹" | "β^-1" => Ok(Letter::BetaInv),
            _ => Err(s.to_string()),
        }
    }
}

/// A reduced word in the automorphism symbols, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupWord {
    /// Free-group word with no adjacent inverse pair.
    Free(Vec<Letter>),
    /// `α^alpha β^beta` in the free abelian group.
    Abelian { alpha: i64, beta: i64 },
}

impl GroupWord {
    pub fn empty(mode: WordProblemMode) -> GroupWord {
        match mode {
            WordProblemMode::FreeT => GroupWord::Free(Vec::new()),
            WordProblemMode::Medial => GroupWord::Abelian { alpha: 0, beta: 0 },
        }
    }

    /// The letters spelling this word; abelian words put all α's first.
    pub fn letters(&self) -> Vec<Letter> {
        match self {
            GroupWord::Free(ls) => ls.clone(),
            &GroupWord::Abelian { alpha, beta } => {
                let power = |e: i64, pos: Letter| {
                    let l = if e >= 0 { pos } else { pos.inverse() };
                    std::iter::repeat_n(l, e.unsigned_abs() as usize)
                };
                power(alpha, Letter::Alpha).chain(power(beta, Letter::Beta)).collect()
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            GroupWord::Free(ls) => ls.len(),
            GroupWord::Abelian { alpha, beta } => (alpha.unsigned_abs() + beta.unsigned_abs()) as usize,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Image of the word in the free abelian group.
    pub fn abelianize(&self) -> GroupWord {
        reduce_word(&self.letters(), WordProblemMode::Medial)
    }
}

impl Ord for GroupWord {
    /// Length first, then lexicographic on letters.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters().cmp(&other.letters()))
            .then_with(|| matches!(self, GroupWord::Abelian { .. }).cmp(&matches!(other, GroupWord::Abelian { .. })))
    }
}

impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            f.write_str(l.symbol())?;
        }
        Ok(())
    }
}

/// Free reduction (cancel `γγ⁻¹` and `γ⁻¹γ`) or exponent summing, by mode.
pub fn reduce_word(letters: &[Letter], mode: WordProblemMode) -> GroupWord {
    match mode {
        WordProblemMode::FreeT => {
            let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
            for &l in letters {
                if stack.last() == Some(&l.inverse()) {
                    stack.pop();
                } else {
                    stack.push(l);
                }
            }
            GroupWord::Free(stack)
        }
        WordProblemMode::Medial => {
            let (mut alpha, mut beta) = (0, 0);
            for &l in letters {
                if l.is_alpha() {
                    alpha += l.exponent();
                } else {
                    beta += l.exponent();
                }
            }
            GroupWord::Abelian { alpha, beta }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use Letter::*;

    #[test]
    fn examples() {
        let free = WordProblemMode::FreeT;
        assert_eq!(reduce_word(&[Alpha, AlphaInv, Beta], free), GroupWord::Free(vec![Beta]));
        assert_eq!(reduce_word(&[], free), GroupWord::empty(free));
        assert_eq!(
            reduce_word(&[Alpha, Beta, BetaInv, Alpha], free),
            GroupWord::Free(vec![Alpha, Alpha])
        );
        assert_eq!(reduce_word(&[Alpha, Beta, AlphaInv, BetaInv], free).len(), 4);
        assert_eq!(
            reduce_word(&[Alpha, Beta, AlphaInv, BetaInv], WordProblemMode::Medial),
            GroupWord::empty(WordProblemMode::Medial)
        );
        assert_eq!(
            reduce_word(&[BetaInv, Alpha, BetaInv], WordProblemMode::Medial).to_string(),
            "ab'b'"
        );
    }

    #[test]
    fn ordering_is_length_then_letters() {
        let w = |ls: &[Letter]| GroupWord::Free(ls.to_vec());
        let mut words = [
            w(&[Beta]),
            w(&[Alpha, Alpha]),
            w(&[]),
            w(&[AlphaInv]),
            w(&[Alpha, BetaInv]),
        ];
        words.sort();
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["", "a'", "b", "aa", "ab'"]);
    }

    /// Deletes a random adjacent inverse pair until none remain.
    fn random_cancellation(mut ls: Vec<Letter>, rng: &mut ChaCha8Rng) -> Vec<Letter> {
        loop {
            let spots: Vec<usize> = (1..ls.len()).filter(|&i| ls[i] == ls[i - 1].inverse()).collect();
            if spots.is_empty() {
                return ls;
            }
            let i = spots[rng.random_range(0..spots.len())];
            ls.drain(i - 1..=i);
        }
    }

    fn arb_letters() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..30)
    }

    proptest! {
        #[test]
        fn reduction_is_confluent(ls in arb_letters(), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_cancellation(ls.clone(), &mut rng);
            let b = random_cancellation(ls.clone(), &mut rng);
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(GroupWord::Free(a), reduce_word(&ls, WordProblemMode::FreeT));
        }

        #[test]
        fn abelianization_commutes_with_reduction(ls in arb_letters()) {
            let free = reduce_word(&ls, WordProblemMode::FreeT);
            prop_assert_eq!(free.abelianize(), reduce_word(&ls, WordProblemMode::Medial));
        }
    }
}
