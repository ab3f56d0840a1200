//! The word problem for free T-quasigroups and free medial quasigroups.
//!
//! Terms are carried into abelian-group words with two automorphism symbols
//! (`α` for the left coefficient, `β` for the right), normalized to a sum of
//! integer multiples of generators under reduced automorphism words, and
//! compared there.

mod delta1;
mod equality;
mod model;
mod normalize;
mod word;

use serde::Serialize;
use thiserror::Error;

pub use delta1::{sigma_expand, sigma_transfer, tau_transfer, Delta1Word};
pub use equality::{
    canonical_form, default_certificate_groups, words_equal, words_equal_with, Certificate, WordEquality,
};
pub use model::{eval_delta1, TModel};
pub use normalize::{normalize, normalize_randomized, CanonicalWord};
pub use word::{reduce_word, GroupWord, Letter};

use crate::constructions::Which;
use crate::tables::Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WordProblemMode {
    /// Free T-quasigroups: automorphism words live in the free group.
    #[default]
    FreeT,
    /// Medial quasigroups: `α` and `β` commute.
    Medial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreewordsError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("model is not a group")]
    NotAGroup,
    #[error("model group is not abelian")]
    NotAbelian,
    #[error("{0} is not an automorphism of the model group")]
    NotAutomorphism(Which),
    #[error("medial models need commuting automorphisms")]
    NotCommuting,
    #[error("generator `{0}` is not assigned")]
    UnboundGenerator(String),
    #[error("element {0} is outside the model group")]
    ElementOutOfRange(Element),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{enumerate_automorphisms, resolve_group, GroupSpec};
    use crate::terms::{Assignment, Term};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const MODES: [WordProblemMode; 2] = [WordProblemMode::FreeT, WordProblemMode::Medial];

    fn arb_word() -> impl Strategy<Value = Delta1Word> {
        let leaf = prop_oneof![
            4 => prop::sample::select(vec!["x", "y", "z"]).prop_map(Delta1Word::gen),
            1 => Just(Delta1Word::Zero),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Delta1Word::plus(a, b)),
                inner.clone().prop_map(Delta1Word::neg),
                (prop::sample::select(Letter::ALL.to_vec()), inner).prop_map(|(l, w)| Delta1Word::apply(l, w)),
            ]
        })
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            4 => prop::sample::select(vec!["x", "y", "z"]).prop_map(Term::var),
            1 => Just(Term::U),
        ];
        leaf.prop_recursive(4, 15, 2, |inner| {
            (0..3u8, inner.clone(), inner).prop_map(|(op, l, r)| match op {
                0 => Term::mul(l, r),
                1 => Term::ldiv(l, r),
                _ => Term::rdiv(l, r),
            })
        })
    }

    fn models(orders: std::ops::RangeInclusive<usize>, mode: WordProblemMode) -> Vec<TModel> {
        let mut out = Vec::new();
        for spec in GroupSpec::abelian_groups(orders) {
            let g = resolve_group(&spec);
            let auts = enumerate_automorphisms(&g).unwrap();
            for a in &auts {
                for b in &auts {
                    if let Ok(m) = TModel::new(g.clone(), a.clone(), b.clone(), mode) {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn axioms_collapse_in_both_modes() {
        let axioms = [("x*(x\\y)", "y"), ("(y/x)*x", "y"), ("x\\(x*y)", "y"), ("(y*x)/x", "y")];
        for mode in MODES {
            for (l, r) in axioms {
                let l = canonical_form(&crate::terms::parse_term(l).unwrap(), mode);
                let r = canonical_form(&crate::terms::parse_term(r).unwrap(), mode);
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn sigma_round_trip_on_one_generator() {
        use Delta1Word as W;
        let a = || W::gen("a");
        let words = [
            W::plus(a(), a()),
            W::neg(a()),
            W::apply(Letter::Alpha, a()),
            W::apply(Letter::BetaInv, W::plus(a(), W::neg(a()))),
            W::Zero,
        ];
        for w in words {
            for mode in MODES {
                assert_eq!(
                    normalize(&tau_transfer(&sigma_expand(&w)), mode),
                    normalize(&w, mode),
                    "{w}"
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sigma_round_trip(w in arb_word()) {
            for mode in MODES {
                prop_assert_eq!(normalize(&tau_transfer(&sigma_expand(&w)), mode), normalize(&w, mode));
            }
        }

        #[test]
        fn randomized_normalization_is_deterministic(w in arb_word(), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for mode in MODES {
                prop_assert_eq!(normalize_randomized(&w, mode, &mut rng), normalize(&w, mode));
            }
        }

        #[test]
        fn mode_coherence(w in arb_word()) {
            let free = normalize(&w, WordProblemMode::FreeT);
            prop_assert_eq!(free.abelianize(), normalize(&w, WordProblemMode::Medial));
        }

        #[test]
        fn normalization_is_sound(w in arb_word(), x in 0usize..8, y in 0usize..8, z in 0usize..8) {
            for mode in MODES {
                let expanded = normalize(&w, mode).to_word();
                for m in models(2..=5, mode) {
                    let n = m.group().order();
                    let asg: Assignment = [("x", x % n), ("y", y % n), ("z", z % n)].into_iter().collect();
                    prop_assert_eq!(eval_delta1(&w, &m, &asg).unwrap(), eval_delta1(&expanded, &m, &asg).unwrap());
                }
            }
        }

        #[test]
        fn equal_in_free_implies_equal_in_medial(a in arb_term(), b in arb_term(), wrap in 0usize..3) {
            let b = match wrap {
                0 => b,
                1 => Term::rdiv(Term::mul(a.clone(), Term::var("y")), Term::var("y")),
                _ => Term::ldiv(Term::var("x"), Term::mul(Term::var("x"), a.clone())),
            };
            if words_equal_with(&a, &b, WordProblemMode::FreeT, &[]).is_equal() {
                prop_assert!(words_equal_with(&a, &b, WordProblemMode::Medial, &[]).is_equal());
            }
        }
    }
}
