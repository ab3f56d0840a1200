//! Linear quasigroups and their classical special cases, built over concrete
//! small groups.

mod automorphisms;
mod groups;

use serde::Serialize;
use thiserror::Error;

pub use automorphisms::{enumerate_automorphisms, enumerate_automorphisms_bounded, DEFAULT_AUTOMORPHISM_BOUND};
pub use groups::{resolve_group, GroupSpec};

use crate::tables::{Element, Permutation, QuasigroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    Phi,
    Psi,
}

impl std::fmt::Display for Which {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Which::Phi => "phi",
            Which::Psi => "psi",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("not a group")]
    NotAGroup,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("{0} is not an automorphism of the group")]
    NotAutomorphism(Which),
    #[error("x ↦ x − φx is not a permutation")]
    PsiNotBijective,
    #[error("element {0} is outside the group")]
    ElementOutOfRange(Element),
    #[error("order {order} exceeds the bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("invalid group spec `{0}`")]
    InvalidGroupSpec(String),
}

/// Where the constant sits in a linear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearForm {
    /// `x·y = φx + c + ψy`
    #[default]
    Middle,
    /// `x·y = (φx + ψy) + c`
    Trailing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSpec {
    pub group: GroupSpec,
    pub phi: Permutation,
    pub psi: Permutation,
    pub c: Element,
    pub form: LinearForm,
}

impl LinearSpec {
    pub fn build(&self) -> Result<QuasigroupTable, ConstructionError> {
        let g = resolve_group(&self.group);
        linear_quasigroup(&g, &self.phi, &self.psi, self.c, self.form)
    }
}

/// Group operations on a table known to be a group with identity `e`.
struct Group<'a> {
    table: &'a QuasigroupTable,
    e: Element,
}

impl<'a> Group<'a> {
    fn new(table: &'a QuasigroupTable) -> Result<Self, ConstructionError> {
        let e = automorphisms::group_identity(table)?;
        Ok(Group { table, e })
    }

    fn add(&self, x: Element, y: Element) -> Element {
        self.table.mul(x, y)
    }

    fn neg(&self, x: Element) -> Element {
        self.table.ldiv(x, self.e)
    }

    fn check_element(&self, c: Element) -> Result<(), ConstructionError> {
        if c < self.table.order() {
            Ok(())
        } else {
            Err(ConstructionError::ElementOutOfRange(c))
        }
    }

    fn check_automorphism(&self, f: &Permutation, which: Which) -> Result<(), ConstructionError> {
        if self.table.is_automorphism(f) {
            Ok(())
        } else {
            Err(ConstructionError::NotAutomorphism(which))
        }
    }

    fn require_abelian(&self) -> Result<(), ConstructionError> {
        if self.table.is_commutative() {
            Ok(())
        } else {
            Err(ConstructionError::NotAbelian)
        }
    }
}

/// `x·y = φx + c + ψy` (or `(φx + ψy) + c`) over the group table `g`.
pub fn linear_quasigroup(
    g: &QuasigroupTable,
    phi: &Permutation,
    psi: &Permutation,
    c: Element,
    form: LinearForm,
) -> Result<QuasigroupTable, ConstructionError> {
    let grp = Group::new(g)?;
    grp.check_automorphism(phi, Which::Phi)?;
    grp.check_automorphism(psi, Which::Psi)?;
    grp.check_element(c)?;
    let table = QuasigroupTable::from_fn(g.order(), |x, y| {
        let (px, py) = (phi.apply(x), psi.apply(y));
        match form {
            LinearForm::Middle => grp.add(grp.add(px, c), py),
            LinearForm::Trailing => grp.add(grp.add(px, py), c),
        }
    });
    Ok(match g.name() {
        Some(name) => table.with_name(format!("linear over {name}")),
        None => table,
    })
}

/// A linear quasigroup over an abelian group.
pub fn t_quasigroup(
    g: &QuasigroupTable,
    phi: &Permutation,
    psi: &Permutation,
    c: Element,
) -> Result<QuasigroupTable, ConstructionError> {
    Group::new(g)?.require_abelian()?;
    let t = linear_quasigroup(g, phi, psi, c, LinearForm::Middle)?;
    let name = format!("T-quasigroup over {}", g.name().unwrap_or("group"));
    Ok(t.with_name(name))
}

/// Manin's form `x·y = (−x − y) + d` over an abelian group; the result is
/// commutative and satisfies `x·(x·y) = y`.
pub fn ch_quasigroup(g: &QuasigroupTable, d: Element) -> Result<QuasigroupTable, ConstructionError> {
    let grp = Group::new(g)?;
    grp.require_abelian()?;
    grp.check_element(d)?;
    Ok(
        QuasigroupTable::from_fn(g.order(), |x, y| grp.add(grp.add(grp.neg(x), grp.neg(y)), d))
            .with_name("CH-quasigroup"),
    )
}

/// Stein's form `x·y = x + φ(−x + y)`, left distributive whenever
/// `x ↦ x − φx` is a permutation.
pub fn left_distributive_quasigroup(
    g: &QuasigroupTable,
    phi: &Permutation,
) -> Result<QuasigroupTable, ConstructionError> {
    let grp = Group::new(g)?;
    grp.check_automorphism(phi, Which::Phi)?;
    let n = g.order();
    let psi: Vec<Element> = (0..n).map(|x| grp.add(x, grp.neg(phi.apply(x)))).collect();
    if Permutation::new(psi).is_none() {
        return Err(ConstructionError::PsiNotBijective);
    }
    Ok(
        QuasigroupTable::from_fn(n, |x, y| grp.add(x, phi.apply(grp.add(grp.neg(x), y))))
            .with_name("left-distributive quasigroup"),
    )
}
