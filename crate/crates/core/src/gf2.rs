//! Dense linear systems over GF(2), solved by bitset Gauss-Jordan elimination.

/// A row of a GF(2) system: coefficient bits plus the right-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Row {
    words: Vec<u64>,
    rhs: bool,
}

impl Row {
    #[inline]
    fn get(&self, col: usize) -> bool {
        self.words[col / 64] >> (col % 64) & 1 == 1
    }

    #[inline]
    fn xor_assign(&mut self, other: &Row) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.rhs ^= other.rhs;
    }

    fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

/// A system `A x = b` over GF(2) with a fixed number of unknowns.
#[derive(Clone, Debug)]
pub struct Gf2System {
    cols: usize,
    rows: Vec<Row>,
}

/// A solution of a consistent system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Solution {
    /// Value of every unknown; free unknowns are set to zero.
    pub values: Vec<bool>,
    /// Rank of the coefficient matrix.
    pub rank: usize,
    /// Unknowns not determined by the system, in column order.
    pub free: Vec<usize>,
}

impl Gf2System {
    pub fn new(cols: usize) -> Self {
        Gf2System {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Adds the equation `sum_{c in cols} x_c = rhs`. Repeated columns cancel.
    pub fn push(&mut self, cols: impl IntoIterator<Item = usize>, rhs: bool) {
        let mut words = vec![0u64; self.cols.div_ceil(64)];
        for c in cols {
            assert!(c < self.cols, "column {c} out of range");
            words[c / 64] ^= 1 << (c % 64);
        }
        self.rows.push(Row { words, rhs });
    }

    /// Reduces the system; returns `None` if it is inconsistent.
    ///
    /// Pivots are chosen column by column in increasing order, and free
    /// unknowns are fixed to zero, so the answer is deterministic.
    pub fn solve(&self) -> Option<Gf2Solution> {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        if rows[next..].iter().any(|r| r.rhs && r.is_zero()) {
            return None;
        }
        let mut values = vec![false; self.cols];
        for (r, &col) in pivots.iter().enumerate() {
            values[col] = rows[r].rhs;
        }
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        Some(Gf2Solution {
            values,
            rank: pivots.len(),
            free,
        })
    }
}
