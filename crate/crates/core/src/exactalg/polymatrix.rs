//! Matrices with polynomial entries and their minors.

use std::collections::HashMap;

use super::matrix::subsets;
use super::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

/// Nonzero minors plus the bookkeeping needed to report the full count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorList {
    pub minors: Vec<Poly>,
    pub total: usize,
    pub zero: usize,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            entries.extend(r);
        }
        PolyMatrix {
            rows: nrows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    /// Determinant of the square submatrix on `rows × cols` by cofactor
    /// expansion along the last column, memoized over row subsets.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Poly {
        let mut memo = HashMap::new();
        self.expand(rows, cols, &mut memo)
    }

    fn expand(&self, rows: &[usize], cols: &[usize], memo: &mut HashMap<Vec<usize>, Poly>) -> Poly {
        let m = rows.len();
        debug_assert_eq!(m, cols.len());
        let sample = &self.entries[0];
        if m == 0 {
            return Poly::constant(sample.ring(), sample.nvars(), num_traits::One::one());
        }
        if let Some(p) = memo.get(rows) {
            return p.clone();
        }
        let last = cols[m - 1];
        let mut acc = Poly::zero(sample.ring(), sample.nvars());
        for (p, &i) in rows.iter().enumerate() {
            let entry = self.get(i, last);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = rows.iter().copied().filter(|&r| r != i).collect();
            let sub = self.expand(&rest, &cols[..m - 1], memo);
            if sub.is_zero() {
                continue;
            }
            let term = entry * &sub;
            acc = if (p + m - 1).is_multiple_of(2) {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        memo.insert(rows.to_vec(), acc.clone());
        acc
    }
}

/// All `k × k` minors, ordered by column subset and then row subset. Zero
/// minors are counted but left out of the list.
pub fn poly_matrix_minors(m: &PolyMatrix, k: usize) -> MinorList {
    let mut out = MinorList {
        minors: Vec::new(),
        total: 0,
        zero: 0,
    };
    if k > m.rows.min(m.cols) || m.entries.is_empty() {
        return out;
    }
    let row_sets = subsets(m.rows, k);
    for cols in subsets(m.cols, k) {
        // The memo is shared across row subsets for a fixed column set.
        let mut memo = HashMap::new();
        for rows in &row_sets {
            let d = m.expand(rows, &cols, &mut memo);
            out.total += 1;
            if d.is_zero() {
                out.zero += 1;
            } else {
                out.minors.push(d);
            }
        }
    }
    out
}
