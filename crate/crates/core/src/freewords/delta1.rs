use std::fmt;

use super::{FreewordsError, Letter};
use crate::terms::{parse_term, Op, Term};

/// Words over the abelian-group signature `{+, −, 0}` extended by the unary
/// automorphism symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Delta1Word {
    Gen(String),
    Zero,
    Plus(Box<Delta1Word>, Box<Delta1Word>),
    Neg(Box<Delta1Word>),
    /// `Apply(γ, w)` is `wγ`.
    Apply(Letter, Box<Delta1Word>),
}

impl Delta1Word {
    pub fn gen(name: impl Into<String>) -> Self {
        Delta1Word::Gen(name.into())
    }

    pub fn plus(l: Delta1Word, r: Delta1Word) -> Self {
        Delta1Word::Plus(Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(w: Delta1Word) -> Self {
        Delta1Word::Neg(Box::new(w))
    }

    pub fn apply(gamma: Letter, w: Delta1Word) -> Self {
        Delta1Word::Apply(gamma, Box::new(w))
    }

    pub fn size(&self) -> usize {
        match self {
            Delta1Word::Gen(_) | Delta1Word::Zero => 1,
            Delta1Word::Plus(l, r) => 1 + l.size() + r.size(),
            Delta1Word::Neg(w) | Delta1Word::Apply(_, w) => 1 + w.size(),
        }
    }
}

impl fmt::Display for Delta1Word {
    /// `x.a` for `xα`; sums are parenthesised when nested.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn atom(w: &Delta1Word, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match w {
                Delta1Word::Plus(..) | Delta1Word::Neg(_) => write!(f, "({w})"),
                _ => write!(f, "{w}"),
            }
        }
        match self {
            Delta1Word::Gen(g) => f.write_str(g),
            Delta1Word::Zero => f.write_str("0"),
            Delta1Word::Plus(l, r) => {
                match l.as_ref() {
                    Delta1Word::Plus(..) => write!(f, "({l})")?,
                    _ => write!(f, "{l}")?,
                }
                f.write_str(" + ")?;
                match r.as_ref() {
                    Delta1Word::Plus(..) => write!(f, "({r})"),
                    _ => write!(f, "{r}"),
                }
            }
            Delta1Word::Neg(w) => {
                f.write_str("-")?;
                atom(w, f)
            }
            Delta1Word::Apply(g, w) => {
                atom(w, f)?;
                write!(f, ".{g}")
            }
        }
    }
}

/// `x·y ↦ xα + yβ`, `x/y ↦ (x − yβ)α⁻¹`, `x\y ↦ (−xα + y)β⁻¹`, `u ↦ 0`.
pub fn tau_transfer(term: &Term) -> Delta1Word {
    use Delta1Word as W;
    match term {
        Term::Var(v) => W::gen(v.clone()),
        Term::U => W::Zero,
        Term::Bin(op, l, r) => {
            let (x, y) = (tau_transfer(l), tau_transfer(r));
            match op {
                Op::Mul => W::plus(W::apply(Letter::Alpha, x), W::apply(Letter::Beta, y)),
                Op::RDiv => W::apply(Letter::AlphaInv, W::plus(x, W::neg(W::apply(Letter::Beta, y)))),
                Op::LDiv => W::apply(Letter::BetaInv, W::plus(W::neg(W::apply(Letter::Alpha, x)), y)),
            }
        }
    }
}

/// The quasigroup-term template of a Δ₁ symbol, in the variables `x`, `y`
/// and the constant `u`.
pub fn sigma_transfer(symbol: &str) -> Result<Term, FreewordsError> {
    let text = match symbol {
        "+" => "(x/u)*((u/u)\\y)",
        "-" | "−" => "(u/u)*((x/u)\\u)",
        "0" => "u",
        other => match other.parse::<Letter>() {
            Ok(Letter::Alpha) => "x*(u\\u)",
            Ok(Letter::Beta) => "(u/u)*x",
            Ok(Letter::AlphaInv) => "x/(u\\u)",
            Ok(Letter::BetaInv) => "(u/u)\\x",
            Err(_) => return Err(FreewordsError::UnknownSymbol(symbol.to_string())),
        },
    };
    Ok(parse_term(text).expect("templates parse"))
}

/// Replaces every Δ₁ operation of `w` by its template.
pub fn sigma_expand(w: &Delta1Word) -> Term {
    let template = |symbol: &str, x: Term, y: Option<Term>| {
        sigma_transfer(symbol)
            .expect("known symbol")
            .substitute(&|name| match name {
                "x" => x.clone(),
                "y" => y.clone().expect("binary template"),
                _ => unreachable!("templates use only x and y"),
            })
    };
    match w {
        Delta1Word::Gen(g) => Term::var(g.clone()),
        Delta1Word::Zero => Term::U,
        Delta1Word::Plus(l, r) => template("+", sigma_expand(l), Some(sigma_expand(r))),
        Delta1Word::Neg(inner) => template("-", sigma_expand(inner), None),
        Delta1Word::Apply(g, inner) => template(g.symbol(), sigma_expand(inner), None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse_term;

    fn tau(s: &str) -> Delta1Word {
        tau_transfer(&parse_term(s).unwrap())
    }

    #[test]
    fn tau_examples() {
        use Delta1Word as W;
        assert_eq!(
            tau("x*y"),
            W::plus(
                W::apply(Letter::Alpha, W::gen("x")),
                W::apply(Letter::Beta, W::gen("y"))
            )
        );
        assert_eq!(tau("u"), W::Zero);
        assert_eq!(
            tau("x/y"),
            W::apply(
                Letter::AlphaInv,
                W::plus(W::gen("x"), W::neg(W::apply(Letter::Beta, W::gen("y"))))
            )
        );
        assert_eq!(tau("x\\y").to_string(), "(-x.a + y).b'");
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_transfer("0").unwrap(), Term::U);
        assert_eq!(sigma_transfer("α").unwrap().to_string(), "x*(u\\u)");
        assert_eq!(sigma_transfer("a").unwrap().to_string(), "x*(u\\u)");
        assert_eq!(sigma_transfer("+").unwrap().to_string(), "(x/u)*((u/u)\\y)");
        assert_eq!(sigma_transfer("β⁻¹").unwrap().to_string(), "(u/u)\\x");
        assert_eq!(sigma_transfer("*"), Err(FreewordsError::UnknownSymbol("*".into())));
    }

    #[test]
    fn sigma_expand_plus() {
        let w = Delta1Word::plus(Delta1Word::gen("a"), Delta1Word::gen("b"));
        assert_eq!(sigma_expand(&w).to_string(), "(a/u)*((u/u)\\b)");
    }
}
