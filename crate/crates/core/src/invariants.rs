//! Cartan angular invariant, Toledo invariant, the octonionic angular
//! invariant in standard position, triple-matching isometries and the
//! straight-cochain character of a triangulated cycle.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::{FRAC_PI_2, PI};

use crate::algebra::{line_angle, Octonion, Quaternion};
use crate::error::GeomError;
use crate::geometry::{isometry_from_frame, orthonormal_complement, FLine};
use crate::hermitian::{lift, normalized_lift, triple_product, BallPoint, HVector, Triple};
use crate::isometry::Isometry;
use crate::linalg::QMatrix;

/// An angle in `[0, pi/2]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct AngularValue(f64);

impl AngularValue {
    /// Clamps tiny excursions outside `[0, pi/2]` produced by roundoff.
    pub fn new(a: f64) -> Result<Self, GeomError> {
        if !(-1e-12..=FRAC_PI_2 + 1e-12).contains(&a) {
            return Err(GeomError::Domain("angular value outside [0, pi/2]"));
        }
        Ok(Self(a.clamp(0.0, FRAC_PI_2)))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn tan(self) -> f64 {
        self.0.tan()
    }
}

/// Angle between the real line and the Hermitian triple product of the lifts.
pub fn cartan_angular(x: &Triple) -> Result<AngularValue, GeomError> {
    AngularValue::new(line_angle(triple_product(x)?)?)
}

/// Toledo invariant `2 A(x)`; nonnegative and symmetric in the three points.
pub fn toledo(x: &Triple) -> Result<f64, GeomError> {
    Ok(2.0 * cartan_angular(x)?.value())
}

/// Area of the geodesic triangle with ideal vertices `x1`, `x2` and finite
/// vertex `w`, all on `line`, by Gauss–Bonnet: `pi - theta` with `theta`
/// the angle at `w`.
///
/// The angle is measured after an isometry moves `w` to the origin, where
/// the metric is a multiple of the Euclidean one and geodesics through the
/// origin are diameters.
pub fn triangle_area_gb(x1: &BallPoint, x2: &BallPoint, w: &BallPoint, line: &FLine) -> Result<f64, GeomError> {
    if !x1.is_boundary() || !x2.is_boundary() {
        return Err(GeomError::NotBoundary);
    }
    if !w.is_interior() {
        return Err(GeomError::NotInterior);
    }
    for p in [x1, x2, w] {
        if !line.contains(p, 1e-8) {
            return Err(GeomError::NotOnLine);
        }
    }
    let wl = normalized_lift(w)?;
    let mut rows = orthonormal_complement(std::slice::from_ref(&wl), wl.len())?;
    rows.push(wl);
    let g = isometry_from_frame(&rows)?;
    let a = g.apply(x1)?;
    let b = g.apply(x2)?;
    let mut dot = 0.0;
    for (p, q) in a.coords().iter().zip(b.coords()) {
        dot += p.dot(*q);
    }
    let cos = (dot / (a.norm() * b.norm())).clamp(-1.0, 1.0);
    Ok(PI - cos.acos())
}

/// Tolerance on `|A(x) - A(y)|` below which [`triple_isometry`] tries to
/// build a matching isometry.
pub const MATCH_TOL: f64 = 1e-8;

/// Unit `u` with `u c conj(u) = d` for unit quaternions of equal real part.
fn conjugator(c: Quaternion, d: Quaternion) -> Quaternion {
    let (vc, vd) = (c.im(), d.im());
    let (nc, nd) = (vc.norm(), vd.norm());
    if nc < 1e-15 || nd < 1e-15 {
        return Quaternion::ONE;
    }
    let (vc, vd) = (vc.scale(1.0 / nc), vd.scale(1.0 / nd));
    let cos = vc.dot(vd).clamp(-1.0, 1.0);
    // cross product of the imaginary parts
    let mut axis = (vc * vd).im();
    if axis.norm() < 1e-12 {
        if cos > 0.0 {
            return Quaternion::ONE;
        }
        // antiparallel: any axis orthogonal to vc
        axis = (vc * Quaternion::I).im();
        if axis.norm() < 1e-6 {
            axis = (vc * Quaternion::J).im();
        }
    }
    let axis = axis.normalize();
    let half = cos.acos() / 2.0;
    Quaternion::real(half.cos()) + axis.scale(half.sin())
}

/// An isometry `f` with `f(x_i) = y_i` when `A(x) = A(y)`, else `None`.
///
/// Lifts of `x` are rescaled by scalars `lambda_i` so that their pairwise
/// form values agree with those of `y`; the isometry is then the basis
/// change between the two (completed) frames.
pub fn triple_isometry(x: &Triple, y: &Triple) -> Result<Option<Isometry>, GeomError> {
    if x.dim() != y.dim() {
        return Err(GeomError::DimensionMismatch { expected: x.dim(), got: y.dim() });
    }
    if !x.is_ideal() || !y.is_ideal() {
        return Err(GeomError::NotBoundary);
    }
    let ax = cartan_angular(x)?;
    let ay = cartan_angular(y)?;
    if (ax.value() - ay.value()).abs() >= MATCH_TOL {
        return Ok(None);
    }
    let xs = x.points().map(lift);
    let ys = y.points().map(lift);
    let a12 = xs[0].inner(&xs[1]);
    let a31 = xs[2].inner(&xs[0]);
    let b12 = ys[0].inner(&ys[1]);
    let b31 = ys[2].inner(&ys[0]);
    let ca = a12 * xs[1].inner(&xs[2]) * a31;
    let cb = b12 * ys[1].inner(&ys[2]) * b31;
    let c = ca.scale(1.0 / (a12.norm_sqr() * a31.norm_sqr()));
    let d = cb.scale(1.0 / (b12.norm_sqr() * b31.norm_sqr()));
    if c.norm() == 0.0 || d.norm() == 0.0 {
        return Err(GeomError::DegenerateTriple("vanishing triple product"));
    }
    let rho = (c.norm() / d.norm()).sqrt();
    let u = conjugator(c.normalize(), d.normalize());
    let l1 = u.scale(rho);
    let l1c_inv = l1.conj().inv();
    let l2 = b12.conj() * l1c_inv * a12.conj().inv();
    let l3 = b31 * l1c_inv * a31.inv();
    let xs = [xs[0].scale_left(l1), xs[1].scale_left(l2), xs[2].scale_left(l3)];

    let len = xs[0].len();
    let (src, dst) = (frame_rows(&xs, len)?, frame_rows(&ys, len)?);
    let sm = QMatrix::from_rows(src.into_iter().map(|r| r.coords).collect())?;
    let dm = QMatrix::from_rows(dst.into_iter().map(|r| r.coords).collect())?;
    let m = QMatrix::solve(&sm, &dm)?;
    Isometry::new(m).map(Some)
}

/// Rows `x1, x2, [x3], c_1, ...`: the triple's lifts (dropping `x3` when it
/// lies in the span of the first two) followed by an orthonormal complement.
fn frame_rows(xs: &[HVector; 3], len: usize) -> Result<Vec<HVector>, GeomError> {
    let c = xs[0].inner(&xs[1]);
    let mu = c.conj().inv().scale(-2.0);
    let b = xs[1].scale_left(mu);
    let u = (&b - &xs[0]).scale(0.5);
    let w = (&b + &xs[0]).scale(0.5);
    let line = FLine::from_lifts(xs[0].clone(), xs[1].clone())?;
    let y = &xs[2] - &line.project_lift(&xs[2]);
    let ny = y.norm_form();
    let mut frame = vec![u, w];
    let mut rows = vec![xs[0].clone(), xs[1].clone()];
    if ny > 1e-10 * xs[2].euclid_norm().powi(2) {
        frame.push(y.scale(1.0 / ny.sqrt()));
        rows.push(xs[2].clone());
    }
    rows.extend(orthonormal_complement(&frame, len)?);
    if rows.len() != len {
        return Err(GeomError::Singular("lifts do not extend to a basis"));
    }
    Ok(rows)
}

/// Octonionic angular invariant of a triple in standard position
/// `x1 = (0,-1)`, `x2 = (0,1)` with `O`-line projection `z_n` of `x3`:
/// `atan(2 |Im z_n| / (1 - |z_n|^2))`, equal to `pi/2` for `|z_n| = 1`.
pub fn octonion_angular(z_n: Octonion) -> Result<AngularValue, GeomError> {
    let r2 = z_n.norm_sqr();
    if r2.sqrt() > 1.0 + crate::tol::BOUNDARY {
        return Err(GeomError::OutsideBall(r2.sqrt()));
    }
    let im = z_n.im_norm();
    let den = (1.0 - r2).max(0.0);
    if den <= 1e-12 && im <= 1e-9 {
        return Err(GeomError::DegenerateTriple("third point coincides with an axis endpoint"));
    }
    AngularValue::new((2.0 * im).atan2(den))
}

/// How [`character_eval`] treats a chain whose boundary does not vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    Strict,
    /// Evaluate anyway and report the chain as open.
    Lenient,
}

/// A simplicial 2-chain: oriented vertex triples with integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TriangulatedCycle {
    pub faces: Vec<([usize; 3], i64)>,
}

impl TriangulatedCycle {
    pub fn new(faces: Vec<([usize; 3], i64)>) -> Self {
        Self { faces }
    }

    /// Oriented edges with nonzero total multiplicity in the boundary.
    pub fn boundary(&self) -> Vec<((usize, usize), i64)> {
        let mut edges: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (v, m) in &self.faces {
            for (a, b) in [(v[0], v[1]), (v[1], v[2]), (v[2], v[0])] {
                if a < b {
                    *edges.entry((a, b)).or_default() += m;
                } else {
                    *edges.entry((b, a)).or_default() -= m;
                }
            }
        }
        edges.into_iter().filter(|(_, m)| *m != 0).collect()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary().is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CharacterReport {
    /// `sum mult * 4 pi tau` over faces.
    pub total: f64,
    /// Per-face `4 pi tau`, before multiplicity.
    pub terms: Vec<f64>,
    pub closed: bool,
}

impl CharacterReport {
    pub fn max_abs_term(&self) -> f64 {
        self.terms.iter().map(|t| t.abs()).fold(0.0, f64::max)
    }
}

/// Upper bound `4 pi^2` of a single term.
pub const TERM_BOUND: f64 = 4.0 * PI * PI;

/// Evaluates the straight cochain `4 pi tau` on a triangulated cycle whose
/// vertices are mapped to boundary points.
///
/// Multiplicities are used as given; the value is symmetric in the vertex
/// order of each face.
pub fn character_eval(
    cycle: &TriangulatedCycle,
    boundary_map: &HashMap<usize, BallPoint>,
    mode: ClosureMode,
) -> Result<CharacterReport, GeomError> {
    let open = cycle.boundary();
    if !open.is_empty() && mode == ClosureMode::Strict {
        let ((a, b), m) = open[0];
        return Err(GeomError::NotClosed(format!("edge {a}-{b} has boundary multiplicity {m}")));
    }
    let mut terms = Vec::with_capacity(cycle.faces.len());
    let mut total = 0.0;
    for (v, m) in &cycle.faces {
        let pts = v.map(|k| boundary_map.get(&k).cloned().ok_or(GeomError::UnknownVertex(k)));
        let [a, b, c] = pts;
        let (a, b, c) = (a?, b?, c?);
        if !(a.is_boundary() && b.is_boundary() && c.is_boundary()) {
            return Err(GeomError::NotBoundary);
        }
        let t = 4.0 * PI * toledo(&Triple::new(a, b, c)?)?;
        debug_assert!(t.abs() <= TERM_BOUND + 1e-9);
        terms.push(t);
        total += *m as f64 * t;
    }
    Ok(CharacterReport { total, terms, closed: open.is_empty() })
}
