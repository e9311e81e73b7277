//! Dense exact linear algebra over the rationals.
//!
//! Everything downstream works with `g × g` matrices for single-digit `g`,
//! so this is a deliberately small, allocation-friendly implementation:
//! row-major [`QMat`] with Gauss–Jordan elimination for inverses and
//! solving, and leading principal minors for the exact Sylvester
//! positive-definiteness test. No pivot-growth heuristics are needed —
//! rational arithmetic is exact, we only pivot to avoid zeros.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;
/// Arbitrary-precision integer used for coefficients and lattice vectors.
pub type Z = BigInt;

/// Shorthand for a rational from an integer pair. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for a rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

/// A dense rational matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        out
    }

    /// Matrix–vector product `self · v`.
    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Row-vector–matrix product `vᵀ · self`.
    pub fn vec_mul(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.rows, v.len(), "dimension mismatch");
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * &self[(i, j)]).sum())
            .collect()
    }

    /// Inverse by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMat::identity(n);
        for col in 0..n {
            // Find any row at or below the diagonal with a nonzero pivot.
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let ta = &f * &a[(col, j)];
                    a[(r, j)] -= ta;
                    let ti = &f * &inv[(col, j)];
                    inv[(r, j)] -= ti;
                }
            }
        }
        Some(inv)
    }

    /// Solves `self · x = rhs`; `None` if the matrix is singular.
    pub fn solve(&self, rhs: &[Q]) -> Option<Vec<Q>> {
        Some(self.inverse()?.mul_vec(rhs))
    }

    /// Determinant by fraction-full Gaussian elimination.
    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Q::zero();
            };
            if pivot != col {
                a.swap_rows(col, pivot);
                det = -det;
            }
            let p = a[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &p;
                for j in col..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] -= t;
                }
            }
        }
        det
    }

    /// The leading principal minors `det(A[..k][..k])` for `k = 1..=n`.
    pub fn leading_principal_minors(&self) -> Vec<Q> {
        (1..=self.rows).map(|k| self.submatrix(0..k, 0..k).det()).collect()
    }

    /// Exact Sylvester criterion: symmetric with all leading principal
    /// minors strictly positive.
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric()
            && self.leading_principal_minors().iter().all(|m| m.is_positive())
    }

    /// Rank over the rationals, by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(pivot) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero())
            else {
                continue;
            };
            a.swap_rows(rank, pivot);
            let p = a[(rank, col)].clone();
            for r in rank + 1..a.rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &p;
                for j in col..a.cols {
                    let t = &f * &a[(rank, j)];
                    a[(r, j)] -= t;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Copies out the submatrix with the given row and column ranges.
    pub fn submatrix(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> QMat {
        let mut out = QMat::zeros(rows.len(), cols.len());
        for (oi, i) in rows.enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                out[(oi, oj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Largest absolute value of any entry (zero for an empty matrix).
    pub fn max_abs_entry(&self) -> Q {
        self.data.iter().map(Q::abs).max().unwrap_or_else(Q::zero)
    }

    /// Largest absolute row sum, i.e. the operator ∞-norm.
    pub fn max_abs_row_sum(&self) -> Q {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Q::abs).sum())
            .max()
            .unwrap_or_else(Q::zero)
    }

    /// Exact LDLᵀ factorization of a symmetric positive-definite matrix:
    /// returns `(L, d)` with `L` unit lower triangular and `d` the strictly
    /// positive pivot diagonal, so that `self = L·diag(d)·Lᵀ`. Returns
    /// `None` when a pivot fails to be positive (the matrix is not
    /// positive definite) or the matrix is not symmetric.
    pub fn ldl(&self) -> Option<(QMat, Vec<Q>)> {
        if !self.is_symmetric() {
            return None;
        }
        let n = self.rows;
        let mut l = QMat::identity(n);
        let mut d = vec![Q::zero(); n];
        for i in 0..n {
            let mut pivot = self[(i, i)].clone();
            for k in 0..i {
                pivot -= &l[(i, k)] * &l[(i, k)] * &d[k];
            }
            if !pivot.is_positive() {
                return None;
            }
            for j in i + 1..n {
                let mut entry = self[(j, i)].clone();
                for k in 0..i {
                    entry -= &l[(j, k)] * &l[(i, k)] * &d[k];
                }
                l[(j, i)] = entry / &pivot;
            }
            d[i] = pivot;
        }
        Some((l, d))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

/// Dot product of two equal-length rational vectors.
pub fn dot(a: &[Q], b: &[Q]) -> Q {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The 1-norm `Σ|v_i|`.
pub fn one_norm(v: &[Q]) -> Q {
    v.iter().map(Q::abs).sum()
}

/// Integer vector promoted to rationals.
pub fn to_q(v: &[Z]) -> Vec<Q> {
    v.iter().map(|n| Q::from(n.clone())).collect()
}

/// True iff every entry is an integer (denominator 1 after reduction).
pub fn all_integral(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_integer())
}
