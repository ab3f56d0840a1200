use std::fmt;
use std::str::FromStr;

use super::ConstructionError;
use crate::tables::{Element, QuasigroupTable};

/// The built-in small groups. Every resolved table has identity element 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    DirectProduct(Vec<GroupSpec>),
    /// Permutations of {0,1,2} in lexicographic one-line order.
    S3,
    /// Rotations 0–3, then reflections 4–7.
    D4,
    /// 1, i, j, k, −1, −i, −j, −k.
    Q8,
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::DirectProduct(fs) => fs.iter().map(GroupSpec::order).product(),
            GroupSpec::S3 => 6,
            GroupSpec::D4 | GroupSpec::Q8 => 8,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            GroupSpec::Cyclic(_) => true,
            GroupSpec::DirectProduct(fs) => fs.iter().all(GroupSpec::is_abelian),
            GroupSpec::S3 | GroupSpec::D4 | GroupSpec::Q8 => false,
        }
    }

    /// The abelian groups of every order in `orders`, one per isomorphism
    /// class, smallest order first.
    pub fn abelian_groups(orders: std::ops::RangeInclusive<usize>) -> Vec<GroupSpec> {
        let mut out = Vec::new();
        for n in orders {
            for parts in abelian_invariants(n) {
                out.push(if parts.len() == 1 {
                    GroupSpec::Cyclic(parts[0])
                } else {
                    GroupSpec::DirectProduct(parts.into_iter().map(GroupSpec::Cyclic).collect())
                });
            }
        }
        out
    }
}

/// Invariant-factor decompositions d₁ | d₂ | … with product `n`.
fn abelian_invariants(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            if !acc.is_empty() {
                out.push(acc.clone());
            }
            return;
        }
        for d in min.max(2)..=n {
            if n.is_multiple_of(d) && acc.last().is_none_or(|&p| d.is_multiple_of(p)) {
                acc.push(d);
                go(n / d, d, acc, out);
                acc.pop();
            }
        }
    }
    if n == 1 {
        return vec![vec![1]];
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    // cyclic first
    out.sort_by_key(|p| p.len());
    out
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| g.to_string()).collect();
                f.write_str(&parts.join("x"))
            }
            GroupSpec::S3 => f.write_str("S3"),
            GroupSpec::D4 => f.write_str("D4"),
            GroupSpec::Q8 => f.write_str("Q8"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = ConstructionError;

    /// `Z3`, `Z2xZ2xZ4`, `S3`, `D4`, `Q8`, and products of these.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConstructionError::InvalidGroupSpec(s.to_string());
        let factors = s
            .split('x')
            .map(|part| match part.trim() {
                "S3" => Ok(GroupSpec::S3),
                "D4" => Ok(GroupSpec::D4),
                "Q8" => Ok(GroupSpec::Q8),
                p => p
                    .strip_prefix('Z')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .map(GroupSpec::Cyclic)
                    .ok_or_else(bad),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if factors.len() == 1 {
            factors.into_iter().next().unwrap()
        } else {
            GroupSpec::DirectProduct(factors)
        })
    }
}

/// The Cayley table of `spec`, element 0 being the identity.
pub fn resolve_group(spec: &GroupSpec) -> QuasigroupTable {
    let table = match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n;
            QuasigroupTable::from_fn(n, |x, y| (x + y) % n)
        }
        GroupSpec::DirectProduct(factors) => {
            let tables: Vec<QuasigroupTable> = factors.iter().map(resolve_group).collect();
            direct_product(&tables)
        }
        GroupSpec::S3 => {
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
            // (p·q)(i) = p(q(i))
            QuasigroupTable::from_fn(6, |a, b| {
                let (p, q) = (perms[a], perms[b]);
                index([p[q[0]], p[q[1]], p[q[2]]])
            })
        }
        GroupSpec::D4 => {
            // r^i s^j ↦ i + 4j; s r = r⁻¹ s
            QuasigroupTable::from_fn(8, |a, b| {
                let (i, j) = (a % 4, a / 4);
                let (k, l) = (b % 4, b / 4);
                let rot = if j == 0 { (i + k) % 4 } else { (i + 4 - k) % 4 };
                rot + 4 * ((j + l) % 2)
            })
        }
        GroupSpec::Q8 => {
            // unit index 0..4 = 1,i,j,k; sign in bit 2
            const UNIT: [[(usize, bool); 4]; 4] = [
                [(0, false), (1, false), (2, false), (3, false)],
                [(1, false), (0, true), (3, false), (2, true)],
                [(2, false), (3, true), (0, true), (1, false)],
                [(3, false), (2, false), (1, true), (0, true)],
            ];
            QuasigroupTable::from_fn(8, |a, b| {
                let (ua, sa) = (a % 4, a >= 4);
                let (ub, sb) = (b % 4, b >= 4);
                let (u, s) = UNIT[ua][ub];
                u + if sa ^ sb ^ s { 4 } else { 0 }
            })
        }
    };
    table.with_name(spec.to_string())
}

/// Mixed-radix product, first factor most significant.
fn direct_product(tables: &[QuasigroupTable]) -> QuasigroupTable {
    let orders: Vec<usize> = tables.iter().map(QuasigroupTable::order).collect();
    let n: usize = orders.iter().product();
    let decode = |mut x: Element| {
        let mut digits = vec![0; orders.len()];
        for i in (0..orders.len()).rev() {
            digits[i] = x % orders[i];
            x /= orders[i];
        }
        digits
    };
    QuasigroupTable::from_fn(n, |a, b| {
        let (da, db) = (decode(a), decode(b));
        tables
            .iter()
            .zip(da.iter().zip(&db))
            .fold(0, |acc, (t, (&x, &y))| acc * t.order() + t.mul(x, y))
    })
}
