//! Finite and free quasigroups.
//!
//! * [`tables`]: Latin squares with divisions, translations and isotopes.
//! * [`terms`]: the term language over `{·, /, \, u}` and exhaustive identity checks.
//! * [`constructions`]: small groups, automorphisms and linear quasigroups.
//! * [`classify`]: isotopy-characterising identities and a brute-force oracle.
//! * [`freewords`]: word problems in free T-quasigroups and free medial quasigroups.

pub mod classify;
pub mod constructions;
pub mod freewords;
pub mod tables;
pub mod terms;
