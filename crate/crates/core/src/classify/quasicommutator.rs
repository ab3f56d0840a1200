use super::ClassifyError;
use crate::tables::{Element, QuasigroupTable};
use crate::terms::{CompiledIdentity, EvalConfig, Identity, Term, Verdict};

/// The quasigroup image of the iterated group commutator under the principal
/// isotopy at `(u, v)`:
///
/// `{x₁,x₂} = R_u((R_u⁻¹x₁ · L_v⁻¹x₂) / L_v⁻¹(R_u⁻¹x₂ · L_v⁻¹x₁))`,
/// and `{x₁,…,xₙ₊₁}` replaces `x₁` by `{x₁,…,xₙ}`.
pub fn quasicommutator(q: &QuasigroupTable, u: Element, v: Element, xs: &[Element]) -> Result<Element, ClassifyError> {
    if xs.len() < 2 {
        return Err(ClassifyError::TooFewElements);
    }
    let n = q.order();
    if let Some(&bad) = [u, v].iter().chain(xs).find(|&&e| e >= n) {
        return Err(ClassifyError::ElementOutOfRange(bad));
    }
    Ok(xs[1..].iter().fold(xs[0], |acc, &x| pair(q, u, v, acc, x)))
}

fn pair(q: &QuasigroupTable, u: Element, v: Element, x1: Element, x2: Element) -> Element {
    let left = q.mul(q.rdiv(x1, u), q.ldiv(v, x2));
    let right = q.ldiv(v, q.mul(q.rdiv(x2, u), q.ldiv(v, x1)));
    q.mul(q.rdiv(left, right), u)
}

fn pair_term(u: &Term, v: &Term, x1: Term, x2: Term) -> Term {
    let left = Term::mul(Term::rdiv(x1.clone(), u.clone()), Term::ldiv(v.clone(), x2.clone()));
    let right = Term::ldiv(
        v.clone(),
        Term::mul(Term::rdiv(x2, u.clone()), Term::ldiv(v.clone(), x1)),
    );
    Term::mul(Term::rdiv(left, right), u.clone())
}

/// The quasicommutator as a term in the variables `u1`, `v`; a single
/// argument is returned unchanged.
pub fn quasicommutator_term(xs: &[Term]) -> Term {
    let (u, v) = (Term::var("u1"), Term::var("v"));
    let mut it = xs.iter().cloned();
    let first = it.next().expect("at least one argument");
    it.fold(first, |acc, x| pair_term(&u, &v, acc, x))
}

/// `(c/u1)*(v\z) = (z/u1)*(v\c)` with `c` a quasicommutator.
fn commutes_with(c: Term, z: Term) -> Identity {
    let (u, v) = (Term::var("u1"), Term::var("v"));
    let plus = |a: Term, b: Term| Term::mul(Term::rdiv(a, u.clone()), Term::ldiv(v.clone(), b));
    Identity::new(plus(c.clone(), z.clone()), plus(z, c))
}

/// The identity characterising isotopes of nilpotent groups of class ≤ n, in
/// the variables `x1..x{n+1}, u1, v`.
pub fn nilpotent_identity(n: usize) -> Result<Identity, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::InvalidDegree(n));
    }
    let xs: Vec<Term> = (1..=n).map(|i| Term::var(format!("x{i}"))).collect();
    let last = Term::var(format!("x{}", n + 1));
    Ok(commutes_with(quasicommutator_term(&xs), last))
}

/// The n-Engel identity: `{x, y, …, y}` with n−1 copies of `y` commutes with `y`.
pub fn engel_identity(n: usize) -> Result<Identity, ClassifyError> {
    if n < 2 {
        return Err(ClassifyError::InvalidDegree(n));
    }
    let mut xs = vec![Term::var("x")];
    xs.extend(std::iter::repeat_n(Term::var("y"), n - 1));
    Ok(commutes_with(quasicommutator_term(&xs), Term::var("y")))
}

pub fn check_nilpotent_isotopy(q: &QuasigroupTable, n: usize, config: &EvalConfig) -> Result<Verdict, ClassifyError> {
    let id = nilpotent_identity(n)?;
    Ok(CompiledIdentity::new(&id).check(q, config)?)
}

pub fn check_engel_isotopy(q: &QuasigroupTable, n: usize, config: &EvalConfig) -> Result<Verdict, ClassifyError> {
    let id = engel_identity(n)?;
    Ok(CompiledIdentity::new(&id).check(q, config)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{enumerate_automorphisms, linear_quasigroup, resolve_group, GroupSpec, LinearForm};
    use crate::tables::Permutation;
    use crate::terms::{eval, Assignment};

    fn m3() -> QuasigroupTable {
        QuasigroupTable::validate(&[vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]).unwrap()
    }

    fn group(name: &str) -> QuasigroupTable {
        resolve_group(&name.parse::<GroupSpec>().unwrap())
    }

    fn holds(v: Result<Verdict, ClassifyError>) -> bool {
        v.unwrap().holds()
    }

    #[test]
    fn z3_example() {
        let t3 = group("Z3");
        assert_eq!(quasicommutator(&t3, 1, 2, &[0, 2]).unwrap(), 0);
        assert_eq!(t3.mul(2, 1), 0);
    }

    #[test]
    fn equal_arguments_give_the_isotope_identity() {
        for name in ["S3", "D4", "Q8", "Z2xZ2"] {
            let g = group(name);
            let n = g.order();
            for u in 0..n {
                for v in 0..n {
                    for x in 0..n {
                        assert_eq!(quasicommutator(&g, u, v, &[x, x]).unwrap(), g.mul(v, u));
                    }
                }
            }
        }
    }

    #[test]
    fn s3_has_a_nontrivial_quasicommutator() {
        let g = group("S3");
        let found = (0..6).any(|u| {
            (0..6).any(|v| (0..6).any(|a| (0..6).any(|b| quasicommutator(&g, u, v, &[a, b]).unwrap() != g.mul(v, u))))
        });
        assert!(found);
    }

    #[test]
    fn term_agrees_with_direct_computation() {
        let g = group("D4");
        let q = linear_quasigroup(
            &g,
            &Permutation::new(vec![0, 3, 2, 1, 4, 7, 6, 5]).unwrap(),
            &Permutation::identity(8),
            3,
            LinearForm::Middle,
        )
        .unwrap();
        let term = quasicommutator_term(&[Term::var("a"), Term::var("b"), Term::var("c")]);
        for (u, v, a, b, c) in [(0, 0, 1, 4, 5), (3, 6, 2, 5, 7), (7, 1, 6, 6, 0)] {
            let asg: Assignment = [("u1", u), ("v", v), ("a", a), ("b", b), ("c", c)]
                .into_iter()
                .collect();
            assert_eq!(
                eval(&term, &q, &asg).unwrap(),
                quasicommutator(&q, u, v, &[a, b, c]).unwrap()
            );
        }
    }

    #[test]
    fn errors() {
        let g = group("Z3");
        assert_eq!(quasicommutator(&g, 0, 0, &[1]), Err(ClassifyError::TooFewElements));
        assert_eq!(
            quasicommutator(&g, 0, 5, &[1, 2]),
            Err(ClassifyError::ElementOutOfRange(5))
        );
        assert_eq!(nilpotent_identity(0).unwrap_err(), ClassifyError::InvalidDegree(0));
        assert_eq!(engel_identity(1).unwrap_err(), ClassifyError::InvalidDegree(1));
    }

    #[test]
    fn identity_shapes() {
        assert_eq!(
            nilpotent_identity(1).unwrap().to_string(),
            "(x1/u1)*(v\\x2) = (x2/u1)*(v\\x1)"
        );
        assert_eq!(nilpotent_identity(3).unwrap().variables().len(), 6);
        assert_eq!(engel_identity(3).unwrap().variables(), ["x", "u1", "v", "y"]);
    }

    #[test]
    fn nilpotency_examples() {
        let cfg = EvalConfig::default();
        assert!(holds(check_nilpotent_isotopy(&m3(), 1, &cfg)));
        let s3 = group("S3");
        for n in 1..=3 {
            assert!(!holds(check_nilpotent_isotopy(&s3, n, &cfg)), "n={n}");
        }
        let d4 = group("D4");
        for phi in enumerate_automorphisms(&d4).unwrap().into_iter().take(3) {
            let q = linear_quasigroup(&d4, &phi, &Permutation::identity(8), 5, LinearForm::Middle).unwrap();
            assert!(!holds(check_nilpotent_isotopy(&q, 1, &cfg)));
            assert!(holds(check_nilpotent_isotopy(&q, 2, &cfg)));
        }
    }

    #[test]
    fn engel_examples() {
        let cfg = EvalConfig::default();
        assert!(holds(check_engel_isotopy(&m3(), 2, &cfg)));
        assert!(!holds(check_engel_isotopy(&group("S3"), 2, &cfg)));
        // class 2 groups are 3-Engel
        assert!(holds(check_engel_isotopy(&group("Q8"), 3, &cfg)));
    }
}
