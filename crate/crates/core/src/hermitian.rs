//! The indefinite Hermitian space `F^{n,1}`, ball points and their lifts.

use std::ops::{Add, Sub};

use crate::algebra::Quaternion;
use crate::error::GeomError;
use crate::tol;

/// A vector of `F^{n,1}`; the last coordinate is the negative one.
#[derive(Clone, Debug, PartialEq)]
pub struct HVector {
    pub coords: Vec<Quaternion>,
}

impl HVector {
    pub fn new(coords: Vec<Quaternion>) -> Self {
        Self { coords }
    }

    /// Standard basis vector `e_k` of `F^{n,1}` (total length `len`).
    pub fn basis(len: usize, k: usize) -> Self {
        let mut c = vec![Quaternion::ZERO; len];
        c[k] = Quaternion::ONE;
        Self::new(c)
    }

    pub fn from_real(coords: &[f64]) -> Self {
        Self::new(coords.iter().map(|&x| Quaternion::real(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `lambda * self`, scalar on the left.
    pub fn scale_left(&self, lambda: Quaternion) -> Self {
        Self::new(self.coords.iter().map(|&c| lambda * c).collect())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coords.iter().map(|c| c.scale(s)).collect())
    }

    /// `<self, other>` without a dimension check (panics on mismatch).
    pub fn inner(&self, other: &Self) -> Quaternion {
        assert_eq!(self.len(), other.len(), "vectors of different dimension");
        let n = self.len() - 1;
        let mut s = Quaternion::ZERO;
        for i in 0..n {
            s += self.coords[i] * other.coords[i].conj();
        }
        s - self.coords[n] * other.coords[n].conj()
    }

    /// The real number `<self, self>`.
    pub fn norm_form(&self) -> f64 {
        let n = self.len() - 1;
        let pos: f64 = self.coords[..n].iter().map(|c| c.norm_sqr()).sum();
        pos - self.coords[n].norm_sqr()
    }

    /// Euclidean norm of the coefficient vector.
    pub fn euclid_norm(&self) -> f64 {
        self.coords.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Rescales to unit Euclidean norm by a positive real.
    pub fn normalized_euclid(&self) -> Self {
        self.scale(1.0 / self.euclid_norm())
    }
}

impl Add for &HVector {
    type Output = HVector;
    fn add(self, rhs: &HVector) -> HVector {
        HVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| *a + *b).collect())
    }
}

impl Sub for &HVector {
    type Output = HVector;
    fn sub(self, rhs: &HVector) -> HVector {
        HVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| *a - *b).collect())
    }
}

/// The Hermitian form `z_1 conj(w_1) + ... + z_n conj(w_n) - z_{n+1} conj(w_{n+1})`.
pub fn form(z: &HVector, w: &HVector) -> Result<Quaternion, GeomError> {
    if z.len() != w.len() {
        return Err(GeomError::DimensionMismatch { expected: z.len(), got: w.len() });
    }
    if z.is_empty() {
        return Err(GeomError::Domain("empty vector"));
    }
    Ok(z.inner(w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Interior,
    Boundary,
}

/// A point of the closed unit ball of `F^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BallPoint {
    coords: Vec<Quaternion>,
    kind: PointKind,
}

impl BallPoint {
    /// Classifies `coords` as interior or boundary; rejects points outside the ball.
    pub fn new(coords: Vec<Quaternion>) -> Result<Self, GeomError> {
        if coords.is_empty() {
            return Err(GeomError::Domain("a ball point needs at least one coordinate"));
        }
        let r = coords.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !r.is_finite() {
            return Err(GeomError::Domain("non-finite coordinate"));
        }
        if r > 1.0 + tol::BOUNDARY {
            return Err(GeomError::OutsideBall(r));
        }
        let kind = if r >= 1.0 - tol::BOUNDARY { PointKind::Boundary } else { PointKind::Interior };
        Ok(Self { coords, kind })
    }

    pub fn interior(coords: Vec<Quaternion>) -> Result<Self, GeomError> {
        let p = Self::new(coords)?;
        if p.is_boundary() {
            return Err(GeomError::NotInterior);
        }
        Ok(p)
    }

    pub fn boundary(coords: Vec<Quaternion>) -> Result<Self, GeomError> {
        let p = Self::new(coords)?;
        if !p.is_boundary() {
            return Err(GeomError::NotBoundary);
        }
        Ok(p)
    }

    pub fn from_real(coords: &[f64]) -> Result<Self, GeomError> {
        Self::new(coords.iter().map(|&x| Quaternion::real(x)).collect())
    }

    pub fn origin(n: usize) -> Self {
        Self { coords: vec![Quaternion::ZERO; n], kind: PointKind::Interior }
    }

    /// The point `(0, ..., 0, h)`.
    pub fn on_last_axis(n: usize, h: Quaternion) -> Result<Self, GeomError> {
        let mut c = vec![Quaternion::ZERO; n];
        c[n - 1] = h;
        Self::new(c)
    }

    /// Projectivizes a lift: `p_i = x_{n+1}^{-1} x_i`.
    pub fn from_lift(x: &HVector) -> Result<Self, GeomError> {
        let n = x.len() - 1;
        let last = x.coords[n];
        if last.norm() <= 1e-300 || last.norm() < 1e-14 * x.euclid_norm() {
            return Err(GeomError::Domain("lift has vanishing last coordinate"));
        }
        let inv = last.inv();
        Self::new(x.coords[..n].iter().map(|&c| inv * c).collect())
    }

    pub fn coords(&self) -> &[Quaternion] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn is_boundary(&self) -> bool {
        self.kind == PointKind::Boundary
    }

    pub fn is_interior(&self) -> bool {
        self.kind == PointKind::Interior
    }

    pub fn last(&self) -> Quaternion {
        self.coords[self.coords.len() - 1]
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Euclidean distance between coordinate vectors.
    pub fn euclid_dist(&self, other: &Self) -> f64 {
        self.coords.iter().zip(&other.coords).map(|(a, b)| (*a - *b).norm_sqr()).sum::<f64>().sqrt()
    }

    /// Norm of the imaginary parts of all coordinates, the Euclidean distance
    /// to the real slice `R^n`.
    pub fn imaginary_norm(&self) -> f64 {
        self.coords.iter().map(|c| c.im().norm_sqr()).sum::<f64>().sqrt()
    }
}

/// The standard lift `(p, 1)`.
pub fn lift(p: &BallPoint) -> HVector {
    let mut c = p.coords.clone();
    c.push(Quaternion::ONE);
    HVector::new(c)
}

/// Lift normalized to `<x, x> = -1`; only for interior points.
pub fn normalized_lift(p: &BallPoint) -> Result<HVector, GeomError> {
    if !p.is_interior() {
        return Err(GeomError::NotInterior);
    }
    let x = lift(p);
    Ok(x.scale(1.0 / (-x.norm_form()).sqrt()))
}

fn check_dims(p: &BallPoint, q: &BallPoint) -> Result<(), GeomError> {
    if p.dim() != q.dim() {
        return Err(GeomError::DimensionMismatch { expected: p.dim(), got: q.dim() });
    }
    Ok(())
}

/// `sinh^2(d/2)` for two interior points, evaluated in ball coordinates to
/// keep precision when the points are close.
fn sinh_half_sq(p: &BallPoint, q: &BallPoint) -> f64 {
    let np = p.norm().powi(2);
    let nq = q.norm().powi(2);
    let delta: Vec<Quaternion> = q.coords.iter().zip(&p.coords).map(|(a, b)| *a - *b).collect();
    let nd: f64 = delta.iter().map(|c| c.norm_sqr()).sum();
    let mut pd = Quaternion::ZERO;
    for (a, b) in p.coords.iter().zip(&delta) {
        pd += *a * b.conj();
    }
    // |p|^2|q|^2 - |<p,q>|^2 = |p|^2|q-p|^2 - |<p,q-p>|^2
    let gram = (np * nd - pd.norm_sqr()).max(0.0);
    let num = (nd - gram).max(0.0);
    num / ((1.0 - np) * (1.0 - nq))
}

/// Hyperbolic distance between interior points.
pub fn distance(p: &BallPoint, q: &BallPoint) -> Result<f64, GeomError> {
    check_dims(p, q)?;
    if p.is_boundary() || q.is_boundary() {
        return Err(GeomError::InfiniteDistance);
    }
    Ok(2.0 * sinh_half_sq(p, q).sqrt().asinh())
}

/// `cosh(d/2)` computed straight from the form, for identities stated in
/// terms of half-distance hyperbolic cosines.
pub fn cosh_half_distance(p: &BallPoint, q: &BallPoint) -> Result<f64, GeomError> {
    check_dims(p, q)?;
    if p.is_boundary() || q.is_boundary() {
        return Err(GeomError::InfiniteDistance);
    }
    let x = lift(p);
    let y = lift(q);
    Ok(x.inner(&y).norm() / (x.norm_form() * y.norm_form()).sqrt())
}

/// Distance between the projectivizations of two negative lifts.
pub fn distance_lifts(x: &HVector, y: &HVector) -> Result<f64, GeomError> {
    let a = x.norm_form();
    let b = y.norm_form();
    if a >= 0.0 || b >= 0.0 {
        return Err(GeomError::InfiniteDistance);
    }
    let c = x.inner(y).norm_sqr();
    let s = ((c - a * b) / (a * b)).max(0.0);
    Ok(2.0 * s.sqrt().asinh())
}

/// Three ball points, pairwise distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct Triple {
    pub p1: BallPoint,
    pub p2: BallPoint,
    pub p3: BallPoint,
}

impl Triple {
    pub fn new(p1: BallPoint, p2: BallPoint, p3: BallPoint) -> Result<Self, GeomError> {
        check_dims(&p1, &p2)?;
        check_dims(&p1, &p3)?;
        if p1.euclid_dist(&p2) <= tol::COINCIDENT
            || p2.euclid_dist(&p3) <= tol::COINCIDENT
            || p3.euclid_dist(&p1) <= tol::COINCIDENT
        {
            return Err(GeomError::Coincident);
        }
        Ok(Self { p1, p2, p3 })
    }

    pub fn points(&self) -> [&BallPoint; 3] {
        [&self.p1, &self.p2, &self.p3]
    }

    pub fn dim(&self) -> usize {
        self.p1.dim()
    }

    /// The triple `(p[perm[0]], p[perm[1]], p[perm[2]])`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let p = self.points();
        Self { p1: p[perm[0]].clone(), p2: p[perm[1]].clone(), p3: p[perm[2]].clone() }
    }

    pub fn is_ideal(&self) -> bool {
        self.points().iter().all(|p| p.is_boundary())
    }
}

/// All six orderings of three indices.
pub const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// `<x1,x2><x2,x3><x3,x1>` for arbitrary lifts.
pub fn hermitian_triple(x1: &HVector, x2: &HVector, x3: &HVector) -> Quaternion {
    x1.inner(x2) * x2.inner(x3) * x3.inner(x1)
}

/// Hermitian triple product of the standard lifts.
pub fn triple_product(x: &Triple) -> Result<Quaternion, GeomError> {
    let [a, b, c] = x.points().map(lift);
    let f12 = a.inner(&b);
    let f23 = b.inner(&c);
    let f31 = c.inner(&a);
    if f12.norm() < tol::DEGENERATE_FORM || f23.norm() < tol::DEGENERATE_FORM || f31.norm() < tol::DEGENERATE_FORM {
        return Err(GeomError::DegenerateTriple("vanishing pairwise form"));
    }
    Ok(f12 * f23 * f31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pt(c: &[Quaternion]) -> BallPoint {
        BallPoint::new(c.to_vec()).unwrap()
    }

    #[test]
    fn form_examples() {
        let z = HVector::from_real(&[0.0, 0.0, 1.0]);
        assert_eq!(form(&z, &z).unwrap(), Quaternion::real(-1.0));
        let a = HVector::from_real(&[0.0, -1.0, 1.0]);
        let b = HVector::from_real(&[0.0, 1.0, 1.0]);
        assert_eq!(form(&a, &b).unwrap(), Quaternion::real(-2.0));
        assert_eq!(form(&b, &b).unwrap(), Quaternion::ZERO);
        assert!(form(&a, &HVector::from_real(&[1.0, 1.0])).is_err());
    }

    #[test]
    fn form_is_left_linear_and_conjugate_right_linear() {
        let z = HVector::new(vec![Quaternion::new(0.1, 0.2, 0.3, 0.4), Quaternion::J, Quaternion::ONE]);
        let w = HVector::new(vec![Quaternion::K, Quaternion::new(0.5, -0.5, 0.0, 1.0), Quaternion::I]);
        let l = Quaternion::new(0.3, -1.0, 2.0, 0.7);
        let lhs = z.scale_left(l).inner(&w);
        assert!(lhs.max_abs_diff(l * z.inner(&w)) < 1e-14);
        let rhs = z.inner(&w.scale_left(l));
        assert!(rhs.max_abs_diff(z.inner(&w) * l.conj()) < 1e-14);
    }

    #[test]
    fn lifts() {
        assert_eq!(lift(&BallPoint::origin(2)), HVector::from_real(&[0.0, 0.0, 1.0]));
        let p = BallPoint::from_real(&[0.0, -1.0]).unwrap();
        assert!(p.is_boundary());
        assert_eq!(lift(&p), HVector::from_real(&[0.0, -1.0, 1.0]));
        let q = pt(&[Quaternion::new(0.1, 0.2, 0.0, 0.0), Quaternion::new(0.0, 0.0, 0.3, 0.1)]);
        assert_abs_diff_eq!(lift(&q).norm_form(), q.norm().powi(2) - 1.0, epsilon = 1e-15);
    }

    #[test]
    fn projectivization_undoes_left_scaling() {
        let p = pt(&[Quaternion::new(0.1, 0.2, 0.0, -0.3), Quaternion::new(0.0, 0.4, 0.3, 0.1)]);
        let x = lift(&p).scale_left(Quaternion::new(-0.7, 1.0, 0.2, 3.0));
        let back = BallPoint::from_lift(&x).unwrap();
        assert!(back.euclid_dist(&p) < 1e-15);
    }

    #[test]
    fn rejects_points_outside_ball() {
        assert!(matches!(BallPoint::from_real(&[0.8, 0.8]), Err(GeomError::OutsideBall(_))));
        assert!(BallPoint::from_real(&[0.0, 1.0 + 5e-10]).unwrap().is_boundary());
    }

    #[test]
    fn distance_on_the_axis() {
        for r in [0.1, 0.5, 0.9, 0.999] {
            let q = BallPoint::from_real(&[0.0, r]).unwrap();
            let d = distance(&BallPoint::origin(2), &q).unwrap();
            assert_abs_diff_eq!(d, 2.0 * f64::atanh(r), epsilon = 1e-12);
        }
        let q = pt(&[Quaternion::ZERO, Quaternion::new(0.0, 0.0, 0.6, 0.0)]);
        assert_abs_diff_eq!(distance(&BallPoint::origin(2), &q).unwrap(), 2.0 * f64::atanh(0.6), epsilon = 1e-12);
    }

    #[test]
    fn distance_matches_lift_formula() {
        let p = pt(&[Quaternion::new(0.1, 0.2, 0.0, -0.3), Quaternion::new(0.0, 0.4, 0.3, 0.1)]);
        let q = pt(&[Quaternion::new(-0.2, 0.0, 0.5, 0.1), Quaternion::new(0.3, 0.0, 0.0, -0.2)]);
        let a = distance(&p, &q).unwrap();
        let b = distance_lifts(&lift(&p), &lift(&q)).unwrap();
        assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        assert_abs_diff_eq!((a / 2.0).cosh(), cosh_half_distance(&p, &q).unwrap(), epsilon = 1e-12);
        assert_eq!(distance(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn boundary_distance_is_an_error() {
        let p = BallPoint::from_real(&[0.0, 1.0]).unwrap();
        assert_eq!(distance(&p, &BallPoint::origin(2)), Err(GeomError::InfiniteDistance));
    }

    #[test]
    fn triple_product_in_standard_position() {
        let x1 = BallPoint::from_real(&[0.0, -1.0]).unwrap();
        let x2 = BallPoint::from_real(&[0.0, 1.0]).unwrap();
        let zn = Quaternion::new(0.2, 0.3, -0.1, 0.4);
        let zp = Quaternion::new((1.0 - zn.norm_sqr()).sqrt(), 0.0, 0.0, 0.0);
        let x3 = pt(&[zp, zn]);
        let t = Triple::new(x1.clone(), x2.clone(), x3).unwrap();
        let expected = (zn.conj() - Quaternion::ONE) * (Quaternion::ONE + zn) * 2.0;
        assert!(triple_product(&t).unwrap().max_abs_diff(expected) < 1e-14);

        let t = Triple::new(x1.clone(), x2.clone(), BallPoint::from_real(&[0.0, 0.3]).unwrap()).unwrap();
        assert!(triple_product(&t).unwrap().im_norm() < 1e-15);

        let t = Triple::new(x1.clone(), x2.clone(), pt(&[Quaternion::ZERO, Quaternion::I])).unwrap();
        let v = triple_product(&t).unwrap();
        // 2(conj z - z) with z = i
        assert!(v.max_abs_diff(Quaternion::new(0.0, -4.0, 0.0, 0.0)) < 1e-15);
    }

    #[test]
    fn degenerate_and_coincident_triples() {
        let x1 = BallPoint::from_real(&[0.0, -1.0]).unwrap();
        assert_eq!(Triple::new(x1.clone(), x1.clone(), BallPoint::origin(2)), Err(GeomError::Coincident));
        // a boundary point is form-orthogonal to itself only; (1,0) and (0,1) have <x,y> = -1
        let a = BallPoint::from_real(&[1.0, 0.0]).unwrap();
        let b = BallPoint::from_real(&[0.0, 1.0]).unwrap();
        let c = BallPoint::from_real(&[(0.5f64).sqrt(), (0.5f64).sqrt()]).unwrap();
        assert!(triple_product(&Triple::new(a, b, c).unwrap()).is_ok());
    }
}
