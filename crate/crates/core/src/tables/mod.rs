//! Finite quasigroups stored as Latin squares.
//!
//! A [`QuasigroupTable`] keeps the multiplication table together with the two
//! division tables, so `mul`, `ldiv` and `rdiv` are all single lookups.

mod analysis;
mod enumerate;
mod qg;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use analysis::{analyze_group, GroupAnalysis, NilpotencyClass};
pub use enumerate::{
    enumerate_latin_squares, enumerate_latin_squares_bounded, random_latin_square, LatinSquares,
    DEFAULT_ENUMERATION_BOUND,
};
pub use qg::{parse_qg, write_qg, QgError};

/// Elements of a finite quasigroup are the dense indices `0..n`.
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table is empty")]
    Empty,
    #[error("table is not square")]
    NonSquare,
    #[error("entry at row {row}, column {col} is out of range")]
    EntryOutOfRange { row: usize, col: usize },
    #[error("row {0} repeats an entry")]
    RowDuplicate(usize),
    #[error("column {0} repeats an entry")]
    ColumnDuplicate(usize),
    #[error("order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
}

/// A bijection of `0..n`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Permutation(Vec<Element>);

impl Permutation {
    /// Returns `None` unless `images` contains each of `0..images.len()` exactly once.
    pub fn new(images: Vec<Element>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[Element] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.0[x]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    /// `self.then(other)` maps `x` to `other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An order-`n` quasigroup given by its Cayley table, `cell(x, y) = x·y`.
#[derive(Debug, Clone)]
pub struct QuasigroupTable {
    order: usize,
    cells: Vec<Element>,
    // ldiv[x*n + z] = x\z, rdiv[z*n + y] = z/y
    ldiv: Vec<Element>,
    rdiv: Vec<Element>,
    name: Option<String>,
}

impl PartialEq for QuasigroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cells == other.cells
    }
}

impl Eq for QuasigroupTable {}

impl QuasigroupTable {
    /// Checks the Latin-square property; errors name the first offending
    /// cell in row-major order.
    pub fn validate(raw: &[Vec<i64>]) -> Result<Self, TableError> {
        let n = raw.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if raw.iter().any(|row| row.len() != n) {
            return Err(TableError::NonSquare);
        }
        let mut row_seen = vec![false; n * n];
        let mut col_seen = vec![false; n * n];
        let mut cells = Vec::with_capacity(n * n);
        for (row, values) in raw.iter().enumerate() {
            for (col, &v) in values.iter().enumerate() {
                if v < 0 || v as u64 >= n as u64 {
                    return Err(TableError::EntryOutOfRange { row, col });
                }
                let v = v as usize;
                if std::mem::replace(&mut row_seen[row * n + v], true) {
                    return Err(TableError::RowDuplicate(row));
                }
                if std::mem::replace(&mut col_seen[col * n + v], true) {
                    return Err(TableError::ColumnDuplicate(col));
                }
                cells.push(v);
            }
        }
        Ok(Self::from_latin_cells(n, cells))
    }

    /// Builds from a flat row-major grid, validating it.
    pub fn from_cells(order: usize, cells: Vec<Element>) -> Result<Self, TableError> {
        if order == 0 {
            return Err(TableError::Empty);
        }
        if cells.len() != order * order {
            return Err(TableError::NonSquare);
        }
        let raw: Vec<Vec<i64>> = cells
            .chunks(order)
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        Self::validate(&raw)
    }

    /// Builds a table from a function already known to produce a Latin square.
    pub(crate) fn from_fn(order: usize, f: impl Fn(Element, Element) -> Element) -> Self {
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                cells.push(f(x, y));
            }
        }
        debug_assert!(Self::from_cells(order, cells.clone()).is_ok());
        Self::from_latin_cells(order, cells)
    }

    pub(crate) fn from_latin_cells(order: usize, cells: Vec<Element>) -> Self {
        let n = order;
        let mut ldiv = vec![0; n * n];
        let mut rdiv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = cells[x * n + y];
                ldiv[x * n + z] = y;
                rdiv[z * n + y] = x;
            }
        }
        QuasigroupTable {
            order,
            cells,
            ldiv,
            rdiv,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[Element] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.cells.chunks(self.order)
    }

    /// `x·y`
    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.cells[x * self.order + y]
    }

    /// `x\z`: the unique `y` with `x·y = z`.
    #[inline]
    pub fn ldiv(&self, x: Element, z: Element) -> Element {
        self.ldiv[x * self.order + z]
    }

    /// `z/y`: the unique `x` with `x·y = z`.
    #[inline]
    pub fn rdiv(&self, z: Element, y: Element) -> Element {
        self.rdiv[z * self.order + y]
    }

    /// `L_b(x) = b·x`
    pub fn left_translation(&self, b: Element) -> Permutation {
        Permutation((0..self.order).map(|x| self.mul(b, x)).collect())
    }

    /// `R_a(x) = x·a`
    pub fn right_translation(&self, a: Element) -> Permutation {
        Permutation((0..self.order).map(|x| self.mul(x, a)).collect())
    }

    /// The loop `x∘y = R_a⁻¹(x) · L_b⁻¹(y) = (x/a)·(b\y)`, with identity `b·a`.
    pub fn principal_isotope(&self, a: Element, b: Element) -> QuasigroupTable {
        QuasigroupTable::from_fn(self.order, |x, y| self.mul(self.rdiv(x, a), self.ldiv(b, y)))
    }

    /// `x∘y = h⁻¹(f(x)·g(y))`.
    pub fn general_isotope(&self, f: &Permutation, g: &Permutation, h: &Permutation) -> QuasigroupTable {
        assert!(
            f.len() == self.order && g.len() == self.order && h.len() == self.order,
            "isotopy components must have the table's order"
        );
        let h_inv = h.inverse();
        QuasigroupTable::from_fn(self.order, |x, y| h_inv.apply(self.mul(f.apply(x), g.apply(y))))
    }

    /// The two-sided identity, if the table is a loop.
    pub fn identity_element(&self) -> Option<Element> {
        let n = self.order;
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.mul(x, y);
                (0..n).all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_group(&self) -> bool {
        self.identity_element().is_some() && self.is_associative()
    }

    /// Whether `f` satisfies `f(x·y) = f(x)·f(y)` for all `x, y`.
    pub fn is_automorphism(&self, f: &Permutation) -> bool {
        let n = self.order;
        f.len() == n && (0..n).all(|x| (0..n).all(|y| f.apply(self.mul(x, y)) == self.mul(f.apply(x), f.apply(y))))
    }
}

impl fmt::Display for QuasigroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_qg(self))
    }
}
