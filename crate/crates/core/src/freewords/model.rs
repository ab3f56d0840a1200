use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Delta1Word, FreewordsError, GroupWord, Letter, WordProblemMode};
use crate::constructions::{t_quasigroup, Which};
use crate::tables::{Element, Permutation, QuasigroupTable};
use crate::terms::Assignment;

/// An abelian group with automorphisms interpreting `α` and `β`.
///
/// The T-quasigroup it determines is `x·y = αx + βy` with `u = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TModel {
    group: QuasigroupTable,
    zero: Element,
    alpha: Permutation,
    beta: Permutation,
    alpha_inv: Permutation,
    beta_inv: Permutation,
}

impl TModel {
    pub fn new(
        group: QuasigroupTable,
        alpha: Permutation,
        beta: Permutation,
        mode: WordProblemMode,
    ) -> Result<Self, FreewordsError> {
        let zero = match group.identity_element() {
            Some(e) if group.is_associative() => e,
            _ => return Err(FreewordsError::NotAGroup),
        };
        if !group.is_commutative() {
            return Err(FreewordsError::NotAbelian);
        }
        for (f, which) in [(&alpha, Which::Phi), (&beta, Which::Psi)] {
            if f.len() != group.order() || !group.is_automorphism(f) {
                return Err(FreewordsError::NotAutomorphism(which));
            }
        }
        if mode == WordProblemMode::Medial && alpha.then(&beta) != beta.then(&alpha) {
            return Err(FreewordsError::NotCommuting);
        }
        Ok(TModel {
            zero,
            alpha_inv: alpha.inverse(),
            beta_inv: beta.inverse(),
            group,
            alpha,
            beta,
        })
    }

    pub fn group(&self) -> &QuasigroupTable {
        &self.group
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    pub fn add(&self, x: Element, y: Element) -> Element {
        self.group.mul(x, y)
    }

    pub fn neg(&self, x: Element) -> Element {
        self.group.ldiv(x, self.zero)
    }

    pub fn letter(&self, l: Letter, x: Element) -> Element {
        match l {
            Letter::Alpha => self.alpha.apply(x),
            Letter::AlphaInv => self.alpha_inv.apply(x),
            Letter::Beta => self.beta.apply(x),
            Letter::BetaInv => self.beta_inv.apply(x),
        }
    }

    /// Applies the letters of `w` in order.
    pub fn word(&self, w: &GroupWord, x: Element) -> Element {
        w.letters().into_iter().fold(x, |acc, l| self.letter(l, acc))
    }

    /// `k·x` for an integer `k`.
    pub fn scale(&self, k: &BigInt, x: Element) -> Element {
        let n = BigInt::from(self.group.order());
        let k = ((k % &n) + &n) % &n;
        let k = k.to_usize().expect("reduced below the order");
        (0..k).fold(self.zero, |acc, _| self.add(acc, x))
    }

    /// The T-quasigroup `x·y = αx + βy`.
    pub fn quasigroup(&self) -> QuasigroupTable {
        t_quasigroup(&self.group, &self.alpha, &self.beta, self.zero).expect("validated model")
    }
}

pub fn eval_delta1(w: &Delta1Word, model: &TModel, assignment: &Assignment) -> Result<Element, FreewordsError> {
    Ok(match w {
        Delta1Word::Gen(g) => {
            let x = assignment
                .get(g)
                .ok_or_else(|| FreewordsError::UnboundGenerator(g.clone()))?;
            if x >= model.group.order() {
                return Err(FreewordsError::ElementOutOfRange(x));
            }
            x
        }
        Delta1Word::Zero => model.zero,
        Delta1Word::Plus(a, b) => model.add(eval_delta1(a, model, assignment)?, eval_delta1(b, model, assignment)?),
        Delta1Word::Neg(a) => model.neg(eval_delta1(a, model, assignment)?),
        Delta1Word::Apply(l, a) => model.letter(*l, eval_delta1(a, model, assignment)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{enumerate_automorphisms, resolve_group, GroupSpec};
    use crate::freewords::tau_transfer;
    use crate::terms::{eval, parse_term};

    fn z(n: usize) -> QuasigroupTable {
        resolve_group(&GroupSpec::Cyclic(n))
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn zero_and_product() {
        let m = TModel::new(
            z(5),
            perm(&[0, 2, 4, 1, 3]),
            perm(&[0, 3, 1, 4, 2]),
            WordProblemMode::FreeT,
        )
        .unwrap();
        let empty = Assignment::default();
        assert_eq!(eval_delta1(&Delta1Word::Zero, &m, &empty).unwrap(), 0);
        let q = m.quasigroup();
        let w = tau_transfer(&parse_term("x*y").unwrap());
        for x in 0..5 {
            for y in 0..5 {
                let a: Assignment = [("x", x), ("y", y)].into_iter().collect();
                assert_eq!(eval_delta1(&w, &m, &a).unwrap(), q.mul(x, y));
            }
        }
    }

    #[test]
    fn tau_agrees_with_term_evaluation() {
        let g = resolve_group(&"Z2xZ2".parse().unwrap());
        let auts = enumerate_automorphisms(&g).unwrap();
        let t = parse_term("(x/(y\\u))*((u/x)\\y)").unwrap();
        let w = tau_transfer(&t);
        for a in &auts {
            for b in &auts {
                let m = TModel::new(g.clone(), a.clone(), b.clone(), WordProblemMode::FreeT).unwrap();
                let q = m.quasigroup();
                for x in 0..4 {
                    for y in 0..4 {
                        let asg: Assignment = [("x", x), ("y", y)].into_iter().collect();
                        assert_eq!(eval_delta1(&w, &m, &asg).unwrap(), eval(&t, &q, &asg).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn validation() {
        let bad = perm(&[1, 0, 2]);
        let id = Permutation::identity(3);
        assert_eq!(
            TModel::new(z(3), bad.clone(), id.clone(), WordProblemMode::FreeT),
            Err(FreewordsError::NotAutomorphism(Which::Phi))
        );
        assert_eq!(
            TModel::new(z(3), id.clone(), bad, WordProblemMode::FreeT),
            Err(FreewordsError::NotAutomorphism(Which::Psi))
        );
        let s3 = resolve_group(&GroupSpec::S3);
        assert_eq!(
            TModel::new(
                s3,
                Permutation::identity(6),
                Permutation::identity(6),
                WordProblemMode::FreeT
            ),
            Err(FreewordsError::NotAbelian)
        );
        // two non-commuting automorphisms of the Klein group
        let v4 = resolve_group(&"Z2xZ2".parse().unwrap());
        let (a, b) = (perm(&[0, 2, 1, 3]), perm(&[0, 1, 3, 2]));
        assert!(TModel::new(v4.clone(), a.clone(), b.clone(), WordProblemMode::FreeT).is_ok());
        assert_eq!(
            TModel::new(v4, a, b, WordProblemMode::Medial),
            Err(FreewordsError::NotCommuting)
        );
    }

    #[test]
    fn unbound_generator() {
        let m = TModel::new(
            z(2),
            Permutation::identity(2),
            Permutation::identity(2),
            WordProblemMode::FreeT,
        )
        .unwrap();
        assert_eq!(
            eval_delta1(&Delta1Word::gen("q"), &m, &Assignment::default()),
            Err(FreewordsError::UnboundGenerator("q".into()))
        );
    }

    #[test]
    fn scaling() {
        let m = TModel::new(
            z(7),
            Permutation::identity(7),
            Permutation::identity(7),
            WordProblemMode::FreeT,
        )
        .unwrap();
        assert_eq!(m.scale(&BigInt::from(-2), 3), 1);
        assert_eq!(m.scale(&BigInt::from(10), 1), 3);
    }
}
