//! Form-preserving matrices acting on ball points.

use std::ops::Mul;

use crate::algebra::Quaternion;
use crate::error::GeomError;
use crate::hermitian::{lift, BallPoint, HVector};
use crate::linalg::QMatrix;
use crate::tol;

/// An isometry of `H^n_F` given by an `(n+1) x (n+1)` matrix `M` with
/// `M J M^* = J`. It acts on row lifts by `x -> x M`.
///
/// Composition follows maps: `(a * b).apply(p) == a.apply(&b.apply(p))`,
/// so the matrix of `a * b` is `M_b M_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Isometry {
    m: QMatrix,
}

impl Isometry {
    /// Wraps a matrix after checking that it preserves the form.
    pub fn new(m: QMatrix) -> Result<Self, GeomError> {
        if !m.is_square() || m.rows() < 2 {
            return Err(GeomError::Domain("isometry matrix must be square of size at least 2"));
        }
        let g = Self { m };
        let r = g.form_residual();
        if r.is_nan() || r > tol::ISOMETRY {
            return Err(GeomError::NotIsometry(r));
        }
        Ok(g)
    }

    /// Wraps a matrix without checking the form.
    pub fn from_matrix_unchecked(m: QMatrix) -> Self {
        Self { m }
    }

    pub fn identity(n: usize) -> Self {
        Self { m: QMatrix::identity(n + 1) }
    }

    /// Real boost of rapidity `r` in the plane of coordinates `(i, n)`, `n` the
    /// negative coordinate. Translates the geodesic through the origin along
    /// the `i`-th axis by `2 r`.
    pub fn boost(n: usize, i: usize, r: f64) -> Self {
        let mut m = QMatrix::identity(n + 1);
        let (c, s) = (Quaternion::real(r.cosh()), Quaternion::real(r.sinh()));
        m[(i, i)] = c;
        m[(i, n)] = s;
        m[(n, i)] = s;
        m[(n, n)] = c;
        Self { m }
    }

    /// Translation along the standard axis from `(0,...,0,-1)` to `(0,...,0,1)`.
    pub fn axis_translation(n: usize, r: f64) -> Self {
        Self::boost(n, n - 1, r)
    }

    /// Block element `[U 0; 0 nu A_r]` with `U` an `(n-1)`-square matrix of
    /// `Sp(n-1)`, `nu` a unit scalar and `A_r` the real boost on the last two
    /// coordinates.
    pub fn block(u: &QMatrix, nu: Quaternion, r: f64) -> Result<Self, GeomError> {
        let n = u.rows() + 1;
        let mut m = QMatrix::identity(n + 1);
        for i in 0..n - 1 {
            for j in 0..n - 1 {
                m[(i, j)] = u[(i, j)];
            }
        }
        m[(n - 1, n - 1)] = nu * r.cosh();
        m[(n - 1, n)] = nu * r.sinh();
        m[(n, n - 1)] = nu * r.sinh();
        m[(n, n)] = nu * r.cosh();
        Self::new(m)
    }

    /// Diagonal isometry `diag(d_1, ..., d_{n+1})` of unit scalars.
    pub fn diagonal(d: &[Quaternion]) -> Result<Self, GeomError> {
        let mut m = QMatrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        Self::new(m)
    }

    /// Real rotation by `theta` in the positive coordinate plane `(i, j)`.
    pub fn rotation(n: usize, i: usize, j: usize, theta: f64) -> Self {
        let mut m = QMatrix::identity(n + 1);
        let (c, s) = (Quaternion::real(theta.cos()), Quaternion::real(theta.sin()));
        m[(i, i)] = c;
        m[(i, j)] = s;
        m[(j, i)] = -s;
        m[(j, j)] = c;
        Self { m }
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.m
    }

    /// Dimension `n` of the hyperbolic space acted on.
    pub fn dim(&self) -> usize {
        self.m.rows() - 1
    }

    /// `max(|M J M^* - J|, |M^* J M - J|)` entrywise, divided by `max(1, |M|^2)`.
    pub fn form_residual(&self) -> f64 {
        let j = QMatrix::form_matrix(self.m.rows());
        let mh = self.m.conj_transpose();
        let a = self.m.matmul(&j).matmul(&mh).max_abs_diff(&j);
        let b = mh.matmul(&j).matmul(&self.m).max_abs_diff(&j);
        // products of large entries cancel, so measure against their size
        let scale = self.m.max_abs().powi(2).max(1.0);
        a.max(b) / scale
    }

    pub fn apply_lift(&self, x: &HVector) -> HVector {
        HVector::new(self.m.left_apply(&x.coords))
    }

    pub fn apply(&self, p: &BallPoint) -> Result<BallPoint, GeomError> {
        if p.dim() != self.dim() {
            return Err(GeomError::DimensionMismatch { expected: self.dim(), got: p.dim() });
        }
        BallPoint::from_lift(&self.apply_lift(&lift(p)))
    }

    /// Inverse `J M^* J`.
    pub fn inverse(&self) -> Self {
        let j = QMatrix::form_matrix(self.m.rows());
        Self { m: j.matmul(&self.m.conj_transpose()).matmul(&j) }
    }

    /// Map composition `self o other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { m: other.m.matmul(&self.m) }
    }

    /// `self o other o self^{-1}`.
    pub fn conjugate(&self, other: &Self) -> Self {
        self.compose(other).compose(&self.inverse())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.dim());
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    /// Largest entry difference between the matrices.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m.max_abs_diff(&other.m)
    }

    /// True if all entries are real within `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.m.is_real(tol)
    }
}

impl Mul for &Isometry {
    type Output = Isometry;
    fn mul(self, rhs: &Isometry) -> Isometry {
        self.compose(rhs)
    }
}

impl Mul for Isometry {
    type Output = Isometry;
    fn mul(self, rhs: Isometry) -> Isometry {
        self.compose(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::distance;
    use approx::assert_abs_diff_eq;

    #[test]
    fn axis_translation_moves_origin_along_axis() {
        let g = Isometry::axis_translation(2, 0.3);
        let p = g.apply(&BallPoint::origin(2)).unwrap();
        assert_abs_diff_eq!(p.coords()[1].re(), 0.3f64.tanh(), epsilon = 1e-15);
        assert_abs_diff_eq!(distance(&BallPoint::origin(2), &p).unwrap(), 0.6, epsilon = 1e-14);
        assert!(g.form_residual() < 1e-15);
    }

    #[test]
    fn composition_order_and_inverse() {
        let a = Isometry::axis_translation(2, 0.4);
        let b = Isometry::rotation(2, 0, 1, 0.7);
        let p = BallPoint::from_real(&[0.1, 0.2]).unwrap();
        let lhs = (&a * &b).apply(&p).unwrap();
        let rhs = a.apply(&b.apply(&p).unwrap()).unwrap();
        assert!(lhs.euclid_dist(&rhs) < 1e-15);
        let id = &a * &a.inverse();
        assert!(id.max_abs_diff(&Isometry::identity(2)) < 1e-14);
    }

    #[test]
    fn rejects_non_isometries() {
        let m = QMatrix::from_real_rows(&[vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(Isometry::new(m), Err(GeomError::NotIsometry(_))));
    }

    #[test]
    fn quaternionic_block_element() {
        let nu = Quaternion::new(0.6, 0.0, 0.8, 0.0);
        let u = QMatrix::from_rows(vec![vec![Quaternion::new(0.0, 0.0, 0.0, 1.0)]]).unwrap();
        let g = Isometry::block(&u, nu, 0.25).unwrap();
        assert!(g.form_residual() < 1e-14);
        let p = g.apply(&BallPoint::origin(2)).unwrap();
        assert_abs_diff_eq!(distance(&BallPoint::origin(2), &p).unwrap(), 0.5, epsilon = 1e-14);
    }
}
