//! Dense exact rational matrices.
//!
//! Rank, determinants and minors go through fraction-free (Bareiss)
//! elimination on an integer copy of the matrix: each row is cleared of
//! denominators first, so every intermediate entry is itself a minor of that
//! integer matrix and the divisions are exact. Kernels and linear solves use
//! plain rational reduced row echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{primitive, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Solution set `particular + span(homogeneous)` of a linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    pub homogeneous: Vec<Vec<Rational>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Panics when the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        QMatrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
                .collect(),
        )
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Rows cleared of denominators (each row scaled by the lcm of its
    /// denominators). Row scaling preserves rank and multiplies minors by a
    /// known factor.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Rational) {
        let mut factor = Rational::one();
        let rows = (0..self.rows)
            .map(|i| {
                let lcm = self
                    .row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                factor *= Rational::from_integer(lcm.clone());
                self.row(i)
                    .iter()
                    .map(|x| (x.numer() * &lcm) / x.denom())
                    .collect()
            })
            .collect();
        (rows, factor)
    }

    pub fn rank(&self) -> usize {
        let (rows, _) = self.integer_rows();
        bareiss(rows, self.cols).rank
    }

    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let (rows, factor) = self.integer_rows();
        let out = bareiss(rows, self.cols);
        if out.rank < self.rows {
            return Ok(Rational::zero());
        }
        let mut det = Rational::from_integer(out.last_pivot);
        if out.swaps % 2 == 1 {
            det = -det;
        }
        Ok(det / factor)
    }

    /// All `k × k` minors, ordered by column subset (lexicographic) and then
    /// by row subset (lexicographic).
    pub fn maximal_minors(&self, k: usize) -> Result<Vec<Rational>> {
        if k > self.rows.min(self.cols) {
            return Err(Error::InvalidArgument(format!(
                "minor size {k} exceeds matrix dimensions {}x{}",
                self.rows, self.cols
            )));
        }
        let row_sets = subsets(self.rows, k);
        let mut out = Vec::new();
        for cols in subsets(self.cols, k) {
            for rows in &row_sets {
                out.push(self.submatrix(rows, &cols).determinant()?);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, each scaled to a
    /// primitive integer vector with first nonzero entry positive.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                primitive(&v)
            })
            .collect()
    }

    /// Basis of `{w : wᵀ M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<Rational>> {
        self.transpose().kernel()
    }

    /// Solves `M v = b`. `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<AffineSolution> {
        assert_eq!(b.len(), self.rows);
        let mut aug = QMatrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            particular[p] = r.get(row, self.cols).clone();
        }
        Some(AffineSolution {
            particular,
            homogeneous: self.kernel(),
        })
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors.to_vec()).rank()
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

struct BareissOutcome {
    rank: usize,
    swaps: usize,
    last_pivot: BigInt,
}

/// Fraction-free row echelon elimination. Columns without a pivot are
/// skipped; the division by the previous pivot stays exact in that case too.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> BareissOutcome {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[r][c].clone();
        r += 1;
    }
    BareissOutcome {
        rank: r,
        swaps,
        last_pivot: prev,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{rat, ratio};

    /// Columns are the five points of the DGO configuration.
    fn dgo_columns() -> QMatrix {
        QMatrix::from_i64(&[
            vec![1, 0, 0, 0, -1],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![1, 1, 1, 1, 1],
        ])
    }

    #[test]
    fn kernel_and_rank_of_point_columns() {
        let m = dgo_columns();
        assert_eq!(m.rank(), 4);
        let k = m.kernel();
        assert_eq!(k, vec![vec![rat(1), rat(0), rat(0), rat(-2), rat(1)]]);
        assert_eq!(QMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn determinant_small_cases() {
        let m = QMatrix::from_rows(vec![vec![ratio(1, 2), rat(3)], vec![rat(4), ratio(-2, 3)]]);
        assert_eq!(m.determinant().unwrap(), ratio(-1, 3) - rat(12));
        // needs a row swap
        let m = QMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant().unwrap(), rat(-1));
        let m = QMatrix::from_i64(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]);
        assert_eq!(m.determinant().unwrap(), rat(6));
        let singular = QMatrix::from_i64(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        assert_eq!(singular.determinant().unwrap(), rat(0));
    }

    #[test]
    fn solve_reports_inconsistency() {
        let m = QMatrix::from_i64(&[vec![1, 1], vec![2, 2]]);
        assert!(m.solve(&[rat(1), rat(3)]).is_none());
        let sol = m.solve(&[rat(1), rat(2)]).unwrap();
        assert_eq!(sol.particular, vec![rat(1), rat(0)]);
        assert_eq!(sol.homogeneous, vec![vec![rat(1), rat(-1)]]);
    }

    #[test]
    fn minors_enumeration_order() {
        let m = QMatrix::from_i64(&[vec![1, 2, 3], vec![4, 5, 6]]);
        let minors = m.maximal_minors(2).unwrap();
        assert_eq!(minors, vec![rat(-3), rat(-6), rat(-3)]);
        assert!(m.maximal_minors(3).is_err());
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
