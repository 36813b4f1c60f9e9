//! Geodesics, projections onto `F`-lines, bisectors and Dirichlet half-spaces.

use crate::algebra::Quaternion;
use crate::error::GeomError;
use crate::hermitian::{cosh_half_distance, distance, lift, normalized_lift, BallPoint, HVector};
use crate::isometry::Isometry;
use crate::linalg::QMatrix;
use crate::tol;

/// Completes a frame of mutually orthogonal vectors with `<f,f> = +-1` by
/// positive unit vectors orthogonal to it (indefinite Gram–Schmidt with
/// left coefficients over the standard basis).
pub(crate) fn orthonormal_complement(frame: &[HVector], len: usize) -> Result<Vec<HVector>, GeomError> {
    let mut basis: Vec<(HVector, f64)> = frame.iter().map(|f| (f.clone(), f.norm_form().signum())).collect();
    let mut out = Vec::new();
    let mut remaining: Vec<usize> = (0..len).collect();
    while basis.len() < len {
        let mut best: Option<(usize, HVector, f64)> = None;
        for (idx, &k) in remaining.iter().enumerate() {
            let mut v = HVector::basis(len, k);
            // two passes keep the result orthogonal to working precision
            for _ in 0..2 {
                for (f, eps) in &basis {
                    let c = v.inner(f).scale(*eps);
                    v = &v - &f.scale_left(c);
                }
            }
            let nf = v.norm_form();
            if best.as_ref().is_none_or(|b| nf > b.2) {
                best = Some((idx, v, nf));
            }
        }
        let (idx, v, nf) = best.ok_or(GeomError::Singular("no candidate left for completion"))?;
        if nf <= tol::PIVOT {
            return Err(GeomError::Singular("indefinite Gram-Schmidt pivot below threshold"));
        }
        remaining.remove(idx);
        let v = v.scale(1.0 / nf.sqrt());
        basis.push((v.clone(), 1.0));
        out.push(v);
    }
    Ok(out)
}

/// Isometry sending the basis rows `rows` (a form-orthonormal basis ordered
/// as positive vectors followed by the negative one) to the standard basis.
pub(crate) fn isometry_from_frame(rows: &[HVector]) -> Result<Isometry, GeomError> {
    let b = QMatrix::from_rows(rows.iter().map(|r| r.coords.clone()).collect())?;
    let j = QMatrix::form_matrix(rows.len());
    Isometry::new(j.matmul(&b.conj_transpose()).matmul(&j))
}

fn require_boundary(p: &BallPoint) -> Result<(), GeomError> {
    if !p.is_boundary() {
        return Err(GeomError::NotBoundary);
    }
    Ok(())
}

fn require_same_dim(p: &BallPoint, q: &BallPoint) -> Result<(), GeomError> {
    if p.dim() != q.dim() {
        return Err(GeomError::DimensionMismatch { expected: p.dim(), got: q.dim() });
    }
    Ok(())
}

/// An isometry `g` with `g(x1) = (0,...,0,-1)` and `g(x2) = (0,...,0,1)`.
pub fn move_to_standard(x1: &BallPoint, x2: &BallPoint) -> Result<Isometry, GeomError> {
    require_same_dim(x1, x2)?;
    require_boundary(x1)?;
    require_boundary(x2)?;
    if x1.euclid_dist(x2) <= tol::COINCIDENT {
        return Err(GeomError::Coincident);
    }
    let a = lift(x1);
    let b = lift(x2);
    let c = a.inner(&b);
    // rescale so that <a, mu b> = -2
    let mu = c.conj().inv().scale(-2.0);
    let b = b.scale_left(mu);
    let u = (&b - &a).scale(0.5);
    let w = (&b + &a).scale(0.5);
    let len = a.len();
    let mut rows = orthonormal_complement(&[u.clone(), w.clone()], len)?;
    rows.push(u);
    rows.push(w);
    isometry_from_frame(&rows)
}

/// The `F`-line spanned by two lifts.
#[derive(Clone, Debug)]
pub struct FLine {
    a: HVector,
    b: HVector,
    gram: [[Quaternion; 2]; 2],
    gram_inv: QMatrix,
}

impl FLine {
    /// Line spanned by two lifts; the Gram matrix must have signature `(1,1)`.
    pub fn from_lifts(a: HVector, b: HVector) -> Result<Self, GeomError> {
        if a.len() != b.len() {
            return Err(GeomError::DimensionMismatch { expected: a.len(), got: b.len() });
        }
        let g11 = a.inner(&a);
        let g12 = a.inner(&b);
        let g21 = b.inner(&a);
        let g22 = b.inner(&b);
        let det = g11.re() * g22.re() - g12.norm_sqr();
        if det.abs() < tol::GRAM_DET {
            return Err(GeomError::Singular("Gram matrix of the line is degenerate"));
        }
        if det > 0.0 {
            return Err(GeomError::Domain("span is not an F-line (Gram signature is not (1,1))"));
        }
        let gram = [[g11, g12], [g21, g22]];
        let gram_inv = QMatrix::from_rows(vec![vec![g11, g12], vec![g21, g22]])?.inverse()?;
        Ok(Self { a, b, gram, gram_inv })
    }

    /// The line through two distinct ball points.
    pub fn through(p: &BallPoint, q: &BallPoint) -> Result<Self, GeomError> {
        require_same_dim(p, q)?;
        if p.euclid_dist(q) <= tol::COINCIDENT {
            return Err(GeomError::Coincident);
        }
        Self::from_lifts(lift(p), lift(q))
    }

    /// The line `{(0, ..., 0, h)}` through the standard axis.
    pub fn standard(n: usize) -> Self {
        Self::from_lifts(HVector::basis(n + 1, n - 1), HVector::basis(n + 1, n)).expect("standard line")
    }

    pub fn spanning(&self) -> (&HVector, &HVector) {
        (&self.a, &self.b)
    }

    pub fn gram(&self) -> [[Quaternion; 2]; 2] {
        self.gram
    }

    pub fn dim(&self) -> usize {
        self.a.len() - 1
    }

    /// Coefficients `(alpha, beta)` of the Hermitian projection `alpha a + beta b`.
    pub fn coefficients(&self, x: &HVector) -> (Quaternion, Quaternion) {
        let r = [x.inner(&self.a), x.inner(&self.b)];
        let c = self.gram_inv.left_apply(&r);
        (c[0], c[1])
    }

    /// Hermitian projection of a lift onto the span.
    pub fn project_lift(&self, x: &HVector) -> HVector {
        let (al, be) = self.coefficients(x);
        &self.a.scale_left(al) + &self.b.scale_left(be)
    }

    /// Distance from an interior point to the line.
    pub fn distance(&self, p: &BallPoint) -> Result<f64, GeomError> {
        if !p.is_interior() {
            return Err(GeomError::InfiniteDistance);
        }
        let x = lift(p);
        let y = &x - &self.project_lift(&x);
        let s = (y.norm_form() / -x.norm_form()).max(0.0);
        Ok(2.0 * s.sqrt().asinh())
    }

    /// Relative size of the component of `p`'s lift orthogonal to the line;
    /// zero exactly on the closure of the line.
    pub fn offset(&self, p: &BallPoint) -> f64 {
        let x = lift(p);
        let y = &x - &self.project_lift(&x);
        (y.norm_form().max(0.0)).sqrt() / x.euclid_norm()
    }

    pub fn contains(&self, p: &BallPoint, tol: f64) -> bool {
        self.offset(p) <= tol
    }
}

/// Orthogonal projection of `p` onto the line `l`.
///
/// A boundary point on the boundary of the line is returned unchanged.
pub fn project_to_fline(l: &FLine, p: &BallPoint) -> Result<BallPoint, GeomError> {
    if p.dim() != l.dim() {
        return Err(GeomError::DimensionMismatch { expected: l.dim(), got: p.dim() });
    }
    let x = lift(p);
    let px = l.project_lift(&x);
    let scale = x.euclid_norm().powi(2);
    if px.norm_form() >= -1e-12 * scale {
        if p.is_boundary() && l.offset(p) <= 1e-9 {
            return Ok(p.clone());
        }
        return Err(GeomError::OutsideCone);
    }
    BallPoint::from_lift(&px)
}

/// `|cosh(d(p,s)/2) - cosh(d(p,Pi p)/2) cosh(d(Pi p,s)/2)|` for `s` on `l`.
pub fn pythagoras_check(p: &BallPoint, l: &FLine, s: &BallPoint) -> Result<f64, GeomError> {
    if !l.contains(s, 1e-9) {
        return Err(GeomError::NotOnLine);
    }
    let pi = project_to_fline(l, p)?;
    let lhs = cosh_half_distance(p, s)?;
    let rhs = cosh_half_distance(p, &pi)? * cosh_half_distance(&pi, s)?;
    Ok((lhs - rhs).abs())
}

/// A real geodesic with arc-length parametrization
/// `x(s) = e^{-s/2} a + e^{s/2} b`, `a`, `b` null with `<a, b> = -1/2`.
#[derive(Clone, Debug)]
pub struct Geodesic {
    a: HVector,
    b: HVector,
    start: BallPoint,
    end: BallPoint,
}

impl Geodesic {
    /// The geodesic from boundary point `x` (at `s -> -inf`) to `y` (`s -> +inf`).
    pub fn from_endpoints(x: &BallPoint, y: &BallPoint) -> Result<Self, GeomError> {
        require_same_dim(x, y)?;
        require_boundary(x)?;
        require_boundary(y)?;
        if x.euclid_dist(y) <= tol::COINCIDENT {
            return Err(GeomError::Coincident);
        }
        let a = lift(x);
        let b = lift(y);
        let c = a.inner(&b);
        let mu = -c.scale(1.0 / c.norm());
        let k = 1.0 / (2.0 * c.norm()).sqrt();
        Ok(Self { a: a.scale(k), b: b.scale_left(mu).scale(k), start: x.clone(), end: y.clone() })
    }

    /// The geodesic through interior points `p` (at `s = 0`) and `q` (at `s = d(p,q)`).
    pub fn through(p: &BallPoint, q: &BallPoint) -> Result<Self, GeomError> {
        require_same_dim(p, q)?;
        if p.euclid_dist(q) <= tol::COINCIDENT {
            return Err(GeomError::Coincident);
        }
        let pl = normalized_lift(p)?;
        let ql = normalized_lift(q)?;
        let c = pl.inner(&ql);
        // make <p, q> real and negative
        let mu = -c.scale(1.0 / c.norm());
        let ql = ql.scale_left(mu);
        let ch = c.norm();
        let sh = (ch * ch - 1.0).max(0.0).sqrt();
        if sh <= 1e-15 {
            return Err(GeomError::Coincident);
        }
        let v = (&ql - &pl.scale(ch)).scale(1.0 / sh);
        let a = (&pl - &v).scale(0.5);
        let b = (&pl + &v).scale(0.5);
        let start = BallPoint::from_lift(&a)?;
        let end = BallPoint::from_lift(&b)?;
        Ok(Self { a, b, start, end })
    }

    pub fn endpoints(&self) -> (&BallPoint, &BallPoint) {
        (&self.start, &self.end)
    }

    /// Normalized null lifts `(a, b)` of the endpoints.
    pub fn null_lifts(&self) -> (&HVector, &HVector) {
        (&self.a, &self.b)
    }

    pub fn lift_at(&self, s: f64) -> HVector {
        &self.a.scale((-s / 2.0).exp()) + &self.b.scale((s / 2.0).exp())
    }

    pub fn point(&self, s: f64) -> Result<BallPoint, GeomError> {
        BallPoint::from_lift(&self.lift_at(s))
    }

    pub fn dim(&self) -> usize {
        self.a.len() - 1
    }
}

/// Point at arc length `s` on `g`.
pub fn geodesic_point(g: &Geodesic, s: f64) -> Result<BallPoint, GeomError> {
    g.point(s)
}

/// Distance from an interior point to a geodesic.
///
/// With `p = <X, a>`, `q = <X, b>` for the normalized lift `X` the squared
/// modulus `|<X, x(s)>|^2 = e^{-s}|p|^2 + e^s|q|^2 + 2 Re(p conj q)` is
/// minimized at `e^s = |p| / |q|`.
pub fn distance_to_geodesic(pt: &BallPoint, g: &Geodesic) -> Result<f64, GeomError> {
    let x = normalized_lift(pt)?;
    let p = x.inner(&g.a);
    let q = x.inner(&g.b);
    let c2 = 2.0 * (p.norm() * q.norm() + (p * q.conj()).re());
    Ok(2.0 * (c2 - 1.0).max(0.0).sqrt().asinh())
}

/// Distance from the projection of `x3` onto the line through `x1`, `x2` to
/// the real geodesic joining `x1` and `x2`.
///
/// Computed in standard position `x1 = (0,-1)`, `x2 = (0,1)`, where it is
/// `asinh(2 |Im z_n| / (1 - |z_n|^2))`. Returns `0` when `x3` is an endpoint
/// of that geodesic and `f64::INFINITY` when the projection is a boundary point.
pub fn dist_to_spine(x: &crate::hermitian::Triple) -> Result<f64, GeomError> {
    let g = move_to_standard(&x.p1, &x.p2)?;
    let y = g.apply(&x.p3)?;
    let z = y.last();
    let den = 1.0 - z.norm_sqr();
    let im = z.im_norm();
    if den <= 1e-12 {
        return Ok(if im <= 1e-9 { 0.0 } else { f64::INFINITY });
    }
    Ok((2.0 * im / den).asinh())
}

/// The bisector `{z : d(z, z1) = d(z, z2)}` of two interior points.
#[derive(Clone, Debug)]
pub struct Bisector {
    z1: BallPoint,
    z2: BallPoint,
    frame: Isometry,
}

impl Bisector {
    pub fn new(z1: BallPoint, z2: BallPoint) -> Result<Self, GeomError> {
        require_same_dim(&z1, &z2)?;
        if !z1.is_interior() || !z2.is_interior() {
            return Err(GeomError::NotInterior);
        }
        let g = Geodesic::through(&z1, &z2)?;
        let (e1, e2) = g.endpoints();
        let to_std = move_to_standard(e1, e2)?;
        let mid = to_std.apply(&g.point(distance(&z1, &z2)? / 2.0)?)?;
        let shift = Isometry::axis_translation(z1.dim(), -mid.last().re().atanh());
        let frame = (&shift * &to_std).inverse();
        Ok(Self { z1, z2, frame })
    }

    pub fn centers(&self) -> (&BallPoint, &BallPoint) {
        (&self.z1, &self.z2)
    }

    /// Isometry carrying the standard configuration, centers `(0, -r)` and
    /// `(0, r)` with `r > 0` real, onto this bisector's centers.
    pub fn standard_frame(&self) -> &Isometry {
        &self.frame
    }

    /// The `F`-line spanned by the centers.
    pub fn complex_spine(&self) -> Result<FLine, GeomError> {
        FLine::through(&self.z1, &self.z2)
    }

    /// Point of the spine: the image of `(0, h)`, `h` purely imaginary.
    pub fn spine_at(&self, h: Quaternion) -> Result<BallPoint, GeomError> {
        let n = self.z1.dim();
        self.frame.apply(&BallPoint::interior(spine_coords(n, &[], h)?)?)
    }

    /// Point of the slice over `spine_at(h)`: the image of `(y, h)`.
    pub fn slice_point(&self, y: &[Quaternion], h: Quaternion) -> Result<BallPoint, GeomError> {
        let n = self.z1.dim();
        self.frame.apply(&BallPoint::interior(spine_coords(n, y, h)?)?)
    }
}

fn spine_coords(n: usize, y: &[Quaternion], h: Quaternion) -> Result<Vec<Quaternion>, GeomError> {
    if h.re().abs() > 1e-12 {
        return Err(GeomError::Domain("spine parameter must be purely imaginary"));
    }
    if !y.is_empty() && y.len() != n - 1 {
        return Err(GeomError::DimensionMismatch { expected: n - 1, got: y.len() });
    }
    let mut c = if y.is_empty() { vec![Quaternion::ZERO; n - 1] } else { y.to_vec() };
    c.push(h.im());
    Ok(c)
}

/// `d(p, z1) - d(p, z2)`; zero on the bisector.
pub fn bisector_contains(b: &Bisector, p: &BallPoint) -> Result<f64, GeomError> {
    Ok(distance(p, &b.z1)? - distance(p, &b.z2)?)
}

/// Midpoint of the segment between the centers.
pub fn spine_point(b: &Bisector) -> Result<BallPoint, GeomError> {
    b.frame.apply(&BallPoint::origin(b.z1.dim()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Strictly closer to the first center.
    Plus,
    /// Within `1e-9` of the bisector.
    On,
    Minus,
}

/// Which half-space of the bisector of `z`, `w` contains `y`.
pub fn halfspace_side(z: &BallPoint, w: &BallPoint, y: &BallPoint) -> Result<Side, GeomError> {
    if z.euclid_dist(w) <= tol::COINCIDENT {
        return Err(GeomError::Coincident);
    }
    let r = distance(y, w)? - distance(y, z)?;
    Ok(if r > 1e-9 {
        Side::Plus
    } else if r < -1e-9 {
        Side::Minus
    } else {
        Side::On
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirichletVerdict {
    pub inside: bool,
    /// Set when the orbit was empty and membership holds vacuously.
    pub vacuous: bool,
}

/// Membership of `x` in the Dirichlet domain of `center` with respect to a
/// finite list of orbit points. Points within `1e-9` of a face are outside.
pub fn dirichlet_membership(center: &BallPoint, orbit: &[BallPoint], x: &BallPoint) -> Result<DirichletVerdict, GeomError> {
    if orbit.is_empty() {
        return Ok(DirichletVerdict { inside: true, vacuous: true });
    }
    let dc = distance(x, center)?;
    for o in orbit {
        if o.euclid_dist(center) <= tol::COINCIDENT {
            return Err(GeomError::Coincident);
        }
        if distance(x, o)? - dc <= 1e-9 {
            return Ok(DirichletVerdict { inside: false, vacuous: false });
        }
    }
    Ok(DirichletVerdict { inside: true, vacuous: false })
}
