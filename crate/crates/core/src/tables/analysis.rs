use serde::Serialize;

use super::{Element, QuasigroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NilpotencyClass {
    Class(usize),
    NotNilpotent,
}

impl NilpotencyClass {
    /// True iff the class is a number `<= n`.
    pub fn at_most(self, n: usize) -> bool {
        matches!(self, NilpotencyClass::Class(k) if k <= n)
    }
}

impl std::fmt::Display for NilpotencyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NilpotencyClass::Class(k) => write!(f, "{k}"),
            NilpotencyClass::NotNilpotent => f.write_str("not nilpotent"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupAnalysis {
    pub identity: Option<Element>,
    pub is_group: bool,
    pub is_abelian: bool,
    /// Present only for groups.
    pub nilpotency_class: Option<NilpotencyClass>,
    /// γ₁ ⊋ γ₂ ⊋ … up to the first repeated term; empty for non-groups.
    pub lower_central_series: Vec<Vec<Element>>,
}

impl GroupAnalysis {
    pub fn is_loop(&self) -> bool {
        self.identity.is_some()
    }
}

pub fn analyze_group(q: &QuasigroupTable) -> GroupAnalysis {
    let identity = q.identity_element();
    let is_group = identity.is_some() && q.is_associative();
    if !is_group {
        return GroupAnalysis {
            identity,
            is_group,
            is_abelian: false,
            nilpotency_class: None,
            lower_central_series: Vec::new(),
        };
    }
    let e = identity.unwrap();
    let is_abelian = q.is_commutative();
    let series = lower_central_series(q, e);
    let last = series.last().unwrap();
    let nilpotency_class = if last.len() == 1 {
        // γ_{k+1} = {e} gives class k
        NilpotencyClass::Class(series.len() - 1)
    } else {
        NilpotencyClass::NotNilpotent
    };
    GroupAnalysis {
        identity,
        is_group,
        is_abelian,
        nilpotency_class: Some(nilpotency_class),
        lower_central_series: series,
    }
}

fn inverse(q: &QuasigroupTable, e: Element, x: Element) -> Element {
    q.ldiv(x, e)
}

/// `[g, h] = g + h − g − h`
fn commutator(q: &QuasigroupTable, e: Element, g: Element, h: Element) -> Element {
    let gh = q.mul(g, h);
    let ghg = q.mul(gh, inverse(q, e, g));
    q.mul(ghg, inverse(q, e, h))
}

/// Subgroup generated by `gens`, closed under the group operation (finite,
/// so products suffice).
fn generated_subgroup(q: &QuasigroupTable, e: Element, gens: &[Element]) -> Vec<Element> {
    let n = q.order();
    let mut member = vec![false; n];
    member[e] = true;
    let mut elems = vec![e];
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &g in gens {
            let y = q.mul(x, g);
            if !member[y] {
                member[y] = true;
                elems.push(y);
            }
        }
        i += 1;
    }
    let mut out: Vec<Element> = (0..n).filter(|&x| member[x]).collect();
    out.sort_unstable();
    out
}

fn normal_closure(q: &QuasigroupTable, e: Element, gens: &[Element]) -> Vec<Element> {
    let n = q.order();
    let mut conj: Vec<Element> = Vec::new();
    let mut seen = vec![false; n];
    for &g in gens {
        for h in 0..n {
            let c = q.mul(q.mul(h, g), inverse(q, e, h));
            if !seen[c] {
                seen[c] = true;
                conj.push(c);
            }
        }
    }
    generated_subgroup(q, e, &conj)
}

fn lower_central_series(q: &QuasigroupTable, e: Element) -> Vec<Vec<Element>> {
    let n = q.order();
    let mut series = vec![(0..n).collect::<Vec<_>>()];
    loop {
        let current = series.last().unwrap();
        let mut gens: Vec<Element> = Vec::new();
        let mut seen = vec![false; n];
        for &g in current {
            for h in 0..n {
                let c = commutator(q, e, g, h);
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        let next = normal_closure(q, e, &gens);
        if &next == current {
            break;
        }
        series.push(next);
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{resolve_group, GroupSpec};

    #[test]
    fn cyclic_is_abelian_class_one() {
        let a = analyze_group(&resolve_group(&GroupSpec::Cyclic(3)));
        assert!(a.is_group && a.is_abelian && a.is_loop());
        assert_eq!(a.nilpotency_class, Some(NilpotencyClass::Class(1)));
        assert_eq!(a.lower_central_series, vec![vec![0, 1, 2], vec![0]]);
    }

    #[test]
    fn trivial_group_has_class_zero() {
        let a = analyze_group(&resolve_group(&GroupSpec::Cyclic(1)));
        assert_eq!(a.nilpotency_class, Some(NilpotencyClass::Class(0)));
    }

    #[test]
    fn s3_is_not_nilpotent() {
        let a = analyze_group(&resolve_group(&GroupSpec::S3));
        assert!(a.is_group && !a.is_abelian);
        assert_eq!(a.nilpotency_class, Some(NilpotencyClass::NotNilpotent));
        assert_eq!(a.lower_central_series.len(), 2);
        assert_eq!(a.lower_central_series[1].len(), 3);
    }

    #[test]
    fn d4_and_q8_have_class_two() {
        for spec in [GroupSpec::D4, GroupSpec::Q8] {
            let a = analyze_group(&resolve_group(&spec));
            assert!(a.is_group && !a.is_abelian);
            assert_eq!(a.nilpotency_class, Some(NilpotencyClass::Class(2)));
            assert_eq!(a.lower_central_series[1].len(), 2);
            assert_eq!(a.lower_central_series[2], vec![0]);
        }
    }

    #[test]
    fn non_loop_is_not_a_group() {
        let m3 = QuasigroupTable::validate(&[vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]).unwrap();
        let a = analyze_group(&m3);
        assert!(!a.is_loop() && !a.is_group && !a.is_abelian);
        assert_eq!(a.nilpotency_class, None);
        assert!(a.lower_central_series.is_empty());
    }
}
