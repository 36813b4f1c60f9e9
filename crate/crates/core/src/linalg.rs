//! Dense matrices over the quaternions.

use std::ops::{Index, IndexMut, Mul};

use crate::algebra::Quaternion;
use crate::error::GeomError;

/// Row-major quaternion matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Quaternion::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    /// The form matrix `diag(1, ..., 1, -1)` of size `n`.
    pub fn form_matrix(n: usize) -> Self {
        let mut m = Self::identity(n);
        m[(n - 1, n - 1)] = -Quaternion::ONE;
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self, GeomError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(GeomError::DimensionMismatch { expected: c, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, GeomError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Quaternion::real(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Quaternion] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self) -> Vec<Vec<Quaternion>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimensions do not agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Row vector times matrix, `x M`.
    pub fn left_apply(&self, x: &[Quaternion]) -> Vec<Quaternion> {
        assert_eq!(x.len(), self.rows, "vector length does not match matrix rows");
        let mut out = vec![Quaternion::ZERO; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                *o += xi * self[(i, j)];
            }
        }
        out
    }

    /// Largest coefficient difference between two matrices of equal shape.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| a.max_abs_diff(*b)).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    /// Multiplies every entry by a real number.
    pub fn scale(&self, s: f64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|q| q.scale(s)).collect() }
    }

    /// True when every entry is real.
    pub fn is_real(&self, tol: f64) -> bool {
        self.data.iter().all(|q| q.im_norm() <= tol)
    }

    /// Computes `A^{-1} B` by Gauss–Jordan elimination with partial pivoting.
    ///
    /// Row operations multiply from the left, which is what keeps the
    /// elimination valid over a noncommutative ring.
    pub fn solve(a: &Self, b: &Self) -> Result<Self, GeomError> {
        if !a.is_square() || a.rows != b.rows {
            return Err(GeomError::DimensionMismatch { expected: a.rows, got: b.rows });
        }
        let n = a.rows;
        let scale = a.max_abs().max(f64::MIN_POSITIVE);
        let mut l = a.clone();
        let mut r = b.clone();
        for c in 0..n {
            let (piv, best) = (c..n)
                .map(|i| (i, l[(i, c)].norm()))
                .fold((c, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best <= 1e-14 * scale {
                return Err(GeomError::Singular("matrix is not invertible"));
            }
            if piv != c {
                l.swap_rows(piv, c);
                r.swap_rows(piv, c);
            }
            let inv = l[(c, c)].inv();
            l.left_scale_row(c, inv);
            r.left_scale_row(c, inv);
            for i in 0..n {
                if i == c {
                    continue;
                }
                let f = l[(i, c)];
                if f.is_zero() {
                    continue;
                }
                l.sub_row_multiple(i, c, f);
                r.sub_row_multiple(i, c, f);
            }
        }
        Ok(r)
    }

    pub fn inverse(&self) -> Result<Self, GeomError> {
        Self::solve(self, &Self::identity(self.rows))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn left_scale_row(&mut self, i: usize, s: Quaternion) {
        for j in 0..self.cols {
            self[(i, j)] = s * self[(i, j)];
        }
    }

    /// `row_i -= f * row_k`.
    fn sub_row_multiple(&mut self, i: usize, k: usize, f: Quaternion) {
        for j in 0..self.cols {
            let v = f * self[(k, j)];
            self[(i, j)] -= v;
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.matmul(rhs)
    }
}
