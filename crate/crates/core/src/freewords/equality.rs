use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::{normalize, tau_transfer, CanonicalWord, TModel, WordProblemMode};
use crate::constructions::{enumerate_automorphisms, resolve_group, GroupSpec};
use crate::tables::{Element, Permutation, QuasigroupTable};
use crate::terms::{eval_with, Assignment, Term};

/// A finite T-quasigroup and an assignment under which two terms differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    #[serde(serialize_with = "display")]
    pub group: GroupSpec,
    pub phi: Permutation,
    pub psi: Permutation,
    #[serde(serialize_with = "rows")]
    pub table: QuasigroupTable,
    pub assignment: Assignment,
    pub lhs_value: Element,
    pub rhs_value: Element,
}

fn display<S: Serializer>(g: &GroupSpec, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(g)
}

fn rows<S: Serializer>(q: &QuasigroupTable, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(q.rows())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordEquality {
    Equal,
    Unequal(Option<Box<Certificate>>),
}

impl WordEquality {
    pub fn is_equal(&self) -> bool {
        matches!(self, WordEquality::Equal)
    }
}

impl Serialize for WordEquality {
    /// `{"result": "equal"}`, or `"unequal"` with either a `certificate`
    /// object or `"canonical_forms_differ"`.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        match self {
            WordEquality::Equal => m.serialize_entry("result", "equal")?,
            WordEquality::Unequal(cert) => {
                m.serialize_entry("result", "unequal")?;
                match cert {
                    Some(c) => m.serialize_entry("certificate", c)?,
                    None => m.serialize_entry("certificate", "canonical_forms_differ")?,
                }
            }
        }
        m.end()
    }
}

pub fn canonical_form(term: &Term, mode: WordProblemMode) -> CanonicalWord {
    normalize(&tau_transfer(term), mode)
}

/// Groups searched for certificates: every abelian group of order 2 to 8.
pub fn default_certificate_groups() -> Vec<GroupSpec> {
    GroupSpec::abelian_groups(2..=8)
}

pub fn words_equal(t1: &Term, t2: &Term, mode: WordProblemMode) -> WordEquality {
    words_equal_with(t1, t2, mode, &default_certificate_groups())
}

/// Decides equality in the free T-quasigroup (or free medial quasigroup) by
/// canonical forms; on inequality, searches `groups` in order for a
/// separating model.
pub fn words_equal_with(t1: &Term, t2: &Term, mode: WordProblemMode, groups: &[GroupSpec]) -> WordEquality {
    let diff = canonical_form(t1, mode).difference(&canonical_form(t2, mode));
    if diff.is_zero() {
        return WordEquality::Equal;
    }
    WordEquality::Unequal(find_certificate(t1, t2, &diff, mode, groups))
}

/// For each model the difference is an additive map per generator,
/// `x ↦ Σ c·w(α, β)x`; a generator whose map is nonzero at `e` separates the
/// terms when it is set to `e` and everything else to zero.
fn find_certificate(
    t1: &Term,
    t2: &Term,
    diff: &CanonicalWord,
    mode: WordProblemMode,
    groups: &[GroupSpec],
) -> Option<Box<Certificate>> {
    let mut variables = t1.variables();
    for v in t2.variables() {
        if !variables.contains(&v) {
            variables.push(v);
        }
    }
    for spec in groups {
        let g = resolve_group(spec);
        let Ok(auts) = enumerate_automorphisms(&g) else {
            continue;
        };
        for phi in &auts {
            for psi in &auts {
                let Ok(model) = TModel::new(g.clone(), phi.clone(), psi.clone(), mode) else {
                    continue;
                };
                let Some((generator, e)) = separating_value(diff, &model) else {
                    continue;
                };
                let assignment: Assignment = variables
                    .iter()
                    .map(|v| (v.clone(), if *v == generator { e } else { model.zero() }))
                    .collect();
                let table = model.quasigroup();
                let lhs = eval_with(t1, &table, &assignment, model.zero()).ok()?;
                let rhs = eval_with(t2, &table, &assignment, model.zero()).ok()?;
                if lhs != rhs {
                    return Some(Box::new(Certificate {
                        group: spec.clone(),
                        phi: phi.clone(),
                        psi: psi.clone(),
                        table,
                        assignment,
                        lhs_value: lhs,
                        rhs_value: rhs,
                    }));
                }
            }
        }
    }
    None
}

fn separating_value(diff: &CanonicalWord, model: &TModel) -> Option<(String, Element)> {
    for generator in diff.generators() {
        for e in 0..model.group().order() {
            let value = diff
                .terms()
                .filter(|(g, _, _)| *g == generator)
                .fold(model.zero(), |acc, (_, w, c)| {
                    model.add(acc, model.scale(c, model.word(w, e)))
                });
            if value != model.zero() {
                return Some((generator.to_string(), e));
            }
        }
    }
    None
}
