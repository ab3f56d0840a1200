use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Element, QuasigroupTable, TableError};

/// Default largest order for exhaustive enumeration (161280 squares at n = 5).
pub const DEFAULT_ENUMERATION_BOUND: usize = 5;

/// All Latin squares of order `n`, in row-major lexicographic order.
pub fn enumerate_latin_squares(n: usize) -> Result<LatinSquares, TableError> {
    enumerate_latin_squares_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_latin_squares_bounded(n: usize, bound: usize) -> Result<LatinSquares, TableError> {
    if n > bound || n > 64 {
        return Err(TableError::BoundExceeded { order: n, bound });
    }
    if n == 0 {
        return Err(TableError::Empty);
    }
    Ok(LatinSquares {
        n,
        cells: vec![0; n * n],
        placed: vec![false; n * n],
        row_used: vec![0; n],
        col_used: vec![0; n],
        pos: 0,
        exhausted: false,
    })
}

/// Depth-first search over cells in row-major order, smallest value first.
pub struct LatinSquares {
    n: usize,
    cells: Vec<Element>,
    placed: Vec<bool>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    pos: usize,
    exhausted: bool,
}

impl LatinSquares {
    fn unplace(&mut self, pos: usize) {
        let (r, c) = (pos / self.n, pos % self.n);
        let bit = 1u64 << self.cells[pos];
        self.row_used[r] &= !bit;
        self.col_used[c] &= !bit;
        self.placed[pos] = false;
    }

    fn advance(&mut self) -> bool {
        let n = self.n;
        loop {
            let pos = self.pos;
            let start = if self.placed[pos] {
                self.unplace(pos);
                self.cells[pos] + 1
            } else {
                0
            };
            let (r, c) = (pos / n, pos % n);
            let used = self.row_used[r] | self.col_used[c];
            match (start..n).find(|&v| used & (1u64 << v) == 0) {
                Some(v) => {
                    self.cells[pos] = v;
                    self.placed[pos] = true;
                    self.row_used[r] |= 1 << v;
                    self.col_used[c] |= 1 << v;
                    if pos + 1 == n * n {
                        return true;
                    }
                    self.pos += 1;
                }
                None => {
                    if pos == 0 {
                        return false;
                    }
                    self.pos -= 1;
                }
            }
        }
    }
}

impl Iterator for LatinSquares {
    type Item = QuasigroupTable;

    fn next(&mut self) -> Option<QuasigroupTable> {
        if self.exhausted {
            return None;
        }
        if self.advance() {
            Some(QuasigroupTable::from_latin_cells(self.n, self.cells.clone()))
        } else {
            self.exhausted = true;
            None
        }
    }
}

/// A seeded pseudo-random Latin square of order `n >= 1`.
///
/// Rows are filled one at a time by a randomised bipartite matching between
/// columns and the symbols still free in each column; a Latin rectangle always
/// extends, so no backtracking across rows is needed.
pub fn random_latin_square(n: usize, seed: u64) -> QuasigroupTable {
    assert!(n >= 1, "order must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut col_free = vec![vec![true; n]; n];
    let mut cells = vec![0; n * n];
    for r in 0..n {
        let mut cols: Vec<usize> = (0..n).collect();
        cols.shuffle(&mut rng);
        let candidates: Vec<Vec<Element>> = (0..n)
            .map(|c| {
                let mut vs: Vec<Element> = (0..n).filter(|&v| col_free[c][v]).collect();
                vs.shuffle(&mut rng);
                vs
            })
            .collect();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for &c in &cols {
            let mut visited = vec![false; n];
            let ok = augment(c, &candidates, &mut owner, &mut visited);
            debug_assert!(ok, "Latin rectangles always extend");
        }
        for (v, c) in owner.iter().enumerate() {
            let c = c.expect("perfect matching");
            cells[r * n + c] = v;
            col_free[c][v] = false;
        }
    }
    QuasigroupTable::from_latin_cells(n, cells)
}

fn augment(c: usize, candidates: &[Vec<Element>], owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &v in &candidates[c] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let free = match owner[v] {
            None => true,
            Some(other) => augment(other, candidates, owner, visited),
        };
        if free {
            owner[v] = Some(c);
            return true;
        }
    }
    false
}
