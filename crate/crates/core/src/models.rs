//! Horospherical coordinates, the Carnot group `N = F^{n-1} x Im F` and the
//! Cygan metric.

use crate::algebra::Quaternion;
use crate::error::GeomError;
use crate::hermitian::BallPoint;

/// Element `(xi, v)` of the Carnot group.
#[derive(Clone, Debug, PartialEq)]
pub struct CarnotElement {
    pub xi: Vec<Quaternion>,
    pub v: Quaternion,
}

/// Horospherical coordinates `(xi, v, u)`, `u >= 0` the height.
#[derive(Clone, Debug, PartialEq)]
pub struct CarnotPoint {
    pub xi: Vec<Quaternion>,
    pub v: Quaternion,
    pub u: f64,
}

/// `<xi, eta> = sum xi_i conj(eta_i)` on `F^{n-1}`.
fn herm(a: &[Quaternion], b: &[Quaternion]) -> Quaternion {
    assert_eq!(a.len(), b.len(), "Carnot vectors of different dimension");
    a.iter().zip(b).fold(Quaternion::ZERO, |s, (x, y)| s + *x * y.conj())
}

fn sq_norm(a: &[Quaternion]) -> f64 {
    a.iter().map(|c| c.norm_sqr()).sum()
}

impl CarnotElement {
    /// Fails unless `v` is purely imaginary (up to `1e-12`); the real part is dropped.
    pub fn new(xi: Vec<Quaternion>, v: Quaternion) -> Result<Self, GeomError> {
        if v.re().abs() > 1e-12 {
            return Err(GeomError::Domain("vertical coordinate must be purely imaginary"));
        }
        Ok(Self { xi, v: v.im() })
    }

    pub fn identity(dim: usize) -> Self {
        Self { xi: vec![Quaternion::ZERO; dim], v: Quaternion::ZERO }
    }

    pub fn as_point(&self) -> CarnotPoint {
        CarnotPoint { xi: self.xi.clone(), v: self.v, u: 0.0 }
    }
}

impl CarnotPoint {
    pub fn new(xi: Vec<Quaternion>, v: Quaternion, u: f64) -> Result<Self, GeomError> {
        if v.re().abs() > 1e-12 {
            return Err(GeomError::Domain("vertical coordinate must be purely imaginary"));
        }
        if u < 0.0 || !u.is_finite() {
            return Err(GeomError::Domain("height must be a nonnegative number"));
        }
        Ok(Self { xi, v: v.im(), u })
    }

    /// Carnot dilation `(xi, v, u) -> (r xi, r^2 v, r^2 u)`.
    pub fn dilate(&self, r: f64) -> Self {
        Self { xi: self.xi.iter().map(|c| c.scale(r)).collect(), v: self.v.scale(r * r), u: self.u * r * r }
    }

    /// Carnot translation `T_h: (xi, v, u) -> (xi_0 + xi, v_0 + v + 2 Im<xi_0, xi>, u)`.
    pub fn translate(&self, h: &CarnotElement) -> Self {
        let g = carnot_mul(h, &CarnotElement { xi: self.xi.clone(), v: self.v });
        Self { xi: g.xi, v: g.v, u: self.u }
    }
}

/// Group law `(xi, v)(xi', v') = (xi + xi', v + v' + 2 Im<xi, xi'>)`.
pub fn carnot_mul(a: &CarnotElement, b: &CarnotElement) -> CarnotElement {
    let xi = a.xi.iter().zip(&b.xi).map(|(x, y)| *x + *y).collect();
    let v = a.v + b.v + herm(&a.xi, &b.xi).im().scale(2.0);
    CarnotElement { xi, v }
}

/// Inverse `(-xi, -v)`.
pub fn carnot_inv(a: &CarnotElement) -> CarnotElement {
    CarnotElement { xi: a.xi.iter().map(|x| -*x).collect(), v: -a.v }
}

/// Cygan norm `| |xi|^2 + u - v |^{1/2}`, the modulus taken in `F`.
pub fn cygan_norm(p: &CarnotPoint) -> f64 {
    let re = sq_norm(&p.xi) + p.u;
    (re * re + p.v.norm_sqr()).sqrt().sqrt()
}

/// Cygan distance
/// `| |xi - xi'|^2 + |u - u'| - (v - v' + 2 Im<xi, xi'>) |^{1/2}`.
pub fn cygan_dist(p: &CarnotPoint, q: &CarnotPoint) -> f64 {
    let d: Vec<Quaternion> = p.xi.iter().zip(&q.xi).map(|(a, b)| *a - *b).collect();
    let re = sq_norm(&d) + (p.u - q.u).abs();
    let im = p.v - q.v + herm(&p.xi, &q.xi).im().scale(2.0);
    (re * re + im.norm_sqr()).sqrt().sqrt()
}

/// A point of the boundary sphere in horospherical terms.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundaryCoord {
    Finite { z: Vec<Quaternion>, t: Quaternion },
    Infinity,
}

/// Boundary correspondence `[z, t] -> (2 s^ z, s^ (1 - |z|^2 + t))` with
/// `s = 1 + |z|^2 + t` and `s^ = s / |s|^2`, the scalar acting on the left.
///
/// `z` has `n - 1` coordinates; the result lies on the unit sphere of `F^n`.
pub fn boundary_to_ball(z: &[Quaternion], t: Quaternion) -> Result<BallPoint, GeomError> {
    if t.re().abs() > 1e-12 {
        return Err(GeomError::Domain("vertical coordinate must be purely imaginary"));
    }
    let t = t.im();
    let nz = sq_norm(z);
    let s = Quaternion::real(1.0 + nz) + t;
    let sh = s.scale(1.0 / s.norm_sqr());
    let mut coords: Vec<Quaternion> = z.iter().map(|&c| sh * c.scale(2.0)).collect();
    coords.push(sh * (Quaternion::real(1.0 - nz) + t));
    BallPoint::boundary(coords)
}

/// `boundary_to_ball` extended to the point at infinity, `infinity -> (0, ..., 0, -1)`.
pub fn boundary_coord_to_ball(c: &BoundaryCoord, n: usize) -> Result<BallPoint, GeomError> {
    match c {
        BoundaryCoord::Finite { z, t } => {
            if z.len() + 1 != n {
                return Err(GeomError::DimensionMismatch { expected: n - 1, got: z.len() });
            }
            boundary_to_ball(z, *t)
        }
        BoundaryCoord::Infinity => BallPoint::on_last_axis(n, Quaternion::real(-1.0)),
    }
}

/// Inverse of [`boundary_to_ball`]: `z = (1 + p_n)^{-1} p'`, `t = Im(2 (1 + conj p_n)^{-1})`.
/// The point `(0, ..., 0, -1)` maps to [`BoundaryCoord::Infinity`].
pub fn ball_to_boundary(p: &BallPoint) -> Result<BoundaryCoord, GeomError> {
    if !p.is_boundary() {
        return Err(GeomError::NotBoundary);
    }
    let n = p.dim();
    let pn = p.last();
    let one_plus = Quaternion::ONE + pn;
    if one_plus.norm() < 1e-12 {
        return Ok(BoundaryCoord::Infinity);
    }
    let inv = one_plus.inv();
    let z = p.coords()[..n - 1].iter().map(|&c| inv * c).collect();
    let s = (Quaternion::ONE + pn.conj()).inv().scale(2.0);
    Ok(BoundaryCoord::Finite { z, t: s.im() })
}
