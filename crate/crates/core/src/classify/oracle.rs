use serde::Serialize;

use crate::constructions::{linear_quasigroup, ConstructionError, LinearForm};
use crate::tables::{analyze_group, Element, NilpotencyClass, Permutation, QuasigroupTable};

/// Isotopy facts decided from the principal isotope at `(0, 0)`.
///
/// Every loop isotopic to a group is isomorphic to it, so one principal
/// isotope settles group isotopy, commutativity and nilpotency class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsotopyOracle {
    pub group_isotope: bool,
    pub abelian_isotope: bool,
    pub nilpotency_class: Option<NilpotencyClass>,
}

pub fn oracle_isotopy(q: &QuasigroupTable) -> IsotopyOracle {
    let a = analyze_group(&q.principal_isotope(0, 0));
    IsotopyOracle {
        group_isotope: a.is_group,
        abelian_isotope: a.is_group && a.is_abelian,
        nilpotency_class: a.nilpotency_class,
    }
}

/// `x·y = φx ∘ c ∘ ψy` over the abelian principal isotope `(Q, ∘)` at `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TDecomposition {
    pub a: Element,
    pub b: Element,
    /// Identity element `b·a` of the isotope.
    pub zero: Element,
    #[serde(skip)]
    pub group: QuasigroupTable,
    pub phi: Permutation,
    pub psi: Permutation,
    pub c: Element,
}

impl TDecomposition {
    pub fn reconstruct(&self) -> Result<QuasigroupTable, ConstructionError> {
        linear_quasigroup(&self.group, &self.phi, &self.psi, self.c, LinearForm::Middle)
    }
}

/// Finds the first `(a, b)` in lexicographic order whose principal isotope
/// exhibits `q` as a T-quasigroup, with every candidate verified cell by cell.
pub fn decompose_t(q: &QuasigroupTable) -> Option<TDecomposition> {
    let n = q.order();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find_map(|(a, b)| try_isotope(q, a, b))
}

fn try_isotope(q: &QuasigroupTable, a: Element, b: Element) -> Option<TDecomposition> {
    let n = q.order();
    let g = q.principal_isotope(a, b);
    if !g.is_commutative() || !g.is_associative() {
        return None;
    }
    let e = q.mul(b, a);
    let c = q.mul(e, e);
    let minus_c = g.ldiv(c, e);
    let phi = Permutation::new((0..n).map(|x| g.mul(q.mul(x, e), minus_c)).collect())?;
    let psi = Permutation::new((0..n).map(|y| g.mul(minus_c, q.mul(e, y))).collect())?;
    if !g.is_automorphism(&phi) || !g.is_automorphism(&psi) {
        return None;
    }
    let fits = (0..n).all(|x| (0..n).all(|y| q.mul(x, y) == g.mul(g.mul(phi.apply(x), c), psi.apply(y))));
    fits.then_some(TDecomposition {
        a,
        b,
        zero: e,
        group: g,
        phi,
        psi,
        c,
    })
}
