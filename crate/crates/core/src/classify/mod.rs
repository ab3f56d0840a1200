//! Isotopy-characterising identities and the brute-force oracle they are
//! tested against.

mod catalog;
mod derive;
mod oracle;
mod quasicommutator;
mod report;

use thiserror::Error;

pub use catalog::{abelian_keys, catalog, catalog_entry, group_keys, CatalogEntry, Characterizes};
pub use derive::derive_identity;
pub use oracle::{decompose_t, oracle_isotopy, IsotopyOracle, TDecomposition};
pub use quasicommutator::{
    check_engel_isotopy, check_nilpotent_isotopy, engel_identity, nilpotent_identity, quasicommutator,
    quasicommutator_term,
};
pub use report::{check_entry, classify, ClassificationReport, ClassifyOptions, EntryOutcome, MIN_ENTRY_BUDGET};

use crate::tables::Element;
use crate::terms::EvalError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("a quasicommutator needs at least two arguments")]
    TooFewElements,
    #[error("degree {0} is out of range")]
    InvalidDegree(usize),
    #[error("element {0} is outside the table")]
    ElementOutOfRange(Element),
    #[error("no catalog entry `{0}`")]
    UnknownEntry(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
}
