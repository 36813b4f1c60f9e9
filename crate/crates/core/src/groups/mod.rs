//! Fuchsian embeddings, bending deformations, loxodromic analysis and
//! limit-set sampling.

pub mod examples;
pub mod io;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Quaternion;
use crate::error::GeomError;
use crate::geometry::{distance_to_geodesic, Geodesic};
use crate::hermitian::{distance, BallPoint, HVector, Triple};
use crate::invariants::{cartan_angular, AngularValue};
use crate::isometry::Isometry;
use crate::linalg::QMatrix;
use crate::tol;
use crate::models::{ball_to_boundary, BoundaryCoord};

/// Real 3x3 matrix preserving `diag(1, 1, -1)`.
pub type RealMatrix3 = [[f64; 3]; 3];

/// Views a real matrix of `O(2,1)` as an isometry of `H^2_F` preserving the
/// real plane.
pub fn embed_fuchsian(g: &RealMatrix3) -> Result<Isometry, GeomError> {
    embed_real(&g.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Views a real matrix of `O(n,1)` as an isometry of `H^n_F`.
pub fn embed_real(rows: &[Vec<f64>]) -> Result<Isometry, GeomError> {
    let m = QMatrix::from_real_rows(rows)?;
    let g = Isometry::from_matrix_unchecked(m);
    let r = g.form_residual();
    if r.is_nan() || r > 1e-10 {
        return Err(GeomError::NotIsometry(r));
    }
    Ok(g)
}

/// The `O(2,1)` matrix of the Möbius map `x -> (a x + b) / (c x + d)`,
/// `ad - bc = 1`, acting on the real circle of the ball through
/// `x -> (2x, 1 - x^2) / (1 + x^2)` (so `0 -> (0,1)` and `infinity -> (0,-1)`).
pub fn mobius_to_o21(a: f64, b: f64, c: f64, d: f64) -> Result<RealMatrix3, GeomError> {
    let det = a * d - b * c;
    if (det - 1.0).abs() > 1e-10 {
        return Err(GeomError::Domain("Möbius matrix must have determinant 1"));
    }
    // action on the monomials (s^2, st, t^2) of (s, t) -> (as + bt, cs + dt)
    let s = [[a * a, a * c, c * c], [2.0 * a * b, a * d + b * c, 2.0 * c * d], [b * b, b * d, d * d]];
    // (s^2, st, t^2) Q = (2st, t^2 - s^2, t^2 + s^2)
    let q = [[0.0, -1.0, 1.0], [2.0, 0.0, 0.0], [0.0, 1.0, 1.0]];
    let q_inv = [[0.0, 0.5, 0.0], [-0.5, 0.0, 0.5], [0.5, 0.0, 0.5]];
    Ok(mul3(&mul3(&q_inv, &s), &q))
}

fn mul3(a: &RealMatrix3, b: &RealMatrix3) -> RealMatrix3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Ball point of the real boundary coordinate `x`.
pub fn real_boundary_point(x: f64) -> BallPoint {
    let s = 1.0 + x * x;
    BallPoint::from_real(&[2.0 * x / s, (1.0 - x * x) / s]).expect("point on the unit circle")
}

/// `diag(I_{n-1}, nu, nu)`: maps `(z', z_n)` to `(nu^{-1} z', nu^{-1} z_n nu)`
/// and fixes the endpoints `(0, +-1)` of the standard axis.
pub fn rotation_u(nu: Quaternion, n: usize) -> Result<Isometry, GeomError> {
    if (nu.norm() - 1.0).abs() > 1e-12 {
        return Err(GeomError::Domain("rotation scalar must be a unit quaternion"));
    }
    if n < 1 {
        return Err(GeomError::Domain("dimension must be positive"));
    }
    let mut d = vec![Quaternion::ONE; n + 1];
    d[n - 1] = nu;
    d[n] = nu;
    Isometry::diagonal(&d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionKind {
    /// `Gamma = Gamma_1 *_{Gamma_P} Gamma_2`.
    Amalgam,
    /// `Gamma = <Gamma_1, gamma_2>`.
    Hnn,
}

impl DecompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            DecompositionKind::Amalgam => "amalgam",
            DecompositionKind::Hnn => "hnn",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub name: String,
    pub g: Isometry,
}

impl Generator {
    pub fn new(name: impl Into<String>, g: Isometry) -> Self {
        Self { name: name.into(), g }
    }
}

/// Generators of a group split for bending along the axis of `axis`.
///
/// In the HNN case `gamma2` holds the single extra generator.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupData {
    pub kind: DecompositionKind,
    pub axis: Generator,
    pub gamma1: Vec<Generator>,
    pub gamma2: Vec<Generator>,
}

impl GroupData {
    pub fn new(
        kind: DecompositionKind,
        axis: Generator,
        gamma1: Vec<Generator>,
        gamma2: Vec<Generator>,
    ) -> Result<Self, GeomError> {
        let n = axis.g.dim();
        for g in gamma1.iter().chain(&gamma2).chain(std::iter::once(&axis)) {
            if g.g.dim() != n {
                return Err(GeomError::DimensionMismatch { expected: n, got: g.g.dim() });
            }
            let r = g.g.form_residual();
            if r.is_nan() || r > tol::ISOMETRY {
                return Err(GeomError::NotIsometry(r));
            }
        }
        if kind == DecompositionKind::Hnn && gamma2.len() != 1 {
            return Err(GeomError::Domain("an HNN extension has exactly one extra generator"));
        }
        Ok(Self { kind, axis, gamma1, gamma2 })
    }

    pub fn dim(&self) -> usize {
        self.axis.g.dim()
    }

    /// All generators: the axis, then `Gamma_1`, then `Gamma_2`.
    pub fn generators(&self) -> Vec<&Generator> {
        std::iter::once(&self.axis).chain(&self.gamma1).chain(&self.gamma2).collect()
    }

    /// Largest form residual over all generators.
    pub fn max_form_residual(&self) -> f64 {
        self.generators().iter().map(|g| g.g.form_residual()).fold(0.0, f64::max)
    }

    /// Evaluates a word given as `(generator index, exponent sign)` pairs;
    /// indices follow [`GroupData::generators`]. The word acts as the
    /// composition of its letters, leftmost outermost.
    pub fn eval_word(&self, word: &[(usize, bool)]) -> Result<Isometry, GeomError> {
        let gens = self.generators();
        let mut out = Isometry::identity(self.dim());
        for &(k, inv) in word {
            let g = gens.get(k).ok_or(GeomError::Domain("generator index out of range"))?;
            out = if inv { out.compose(&g.g.inverse()) } else { out.compose(&g.g) };
        }
        Ok(out)
    }
}

fn axis_is_standard(axis: &Isometry) -> Result<bool, GeomError> {
    let n = axis.dim();
    for s in [-1.0, 1.0] {
        let p = BallPoint::on_last_axis(n, Quaternion::real(s))?;
        if axis.apply(&p)?.euclid_dist(&p) > 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bending of an amalgamated product: `Gamma_2` is conjugated by `U_nu`,
/// `Gamma_1` and the axis generator are kept.
pub fn bend_amalgam(g: &GroupData, nu: Quaternion) -> Result<GroupData, GeomError> {
    if g.kind != DecompositionKind::Amalgam {
        return Err(GeomError::WrongKind("amalgam"));
    }
    if !axis_is_standard(&g.axis.g)? {
        return Err(GeomError::NonStandardAxis);
    }
    let u = rotation_u(nu, g.dim())?;
    let gamma2 = g.gamma2.iter().map(|h| Generator::new(h.name.clone(), u.conjugate(&h.g))).collect();
    Ok(GroupData { kind: g.kind, axis: g.axis.clone(), gamma1: g.gamma1.clone(), gamma2 })
}

/// Bending of an HNN extension: `gamma_2` is replaced by `U_nu o gamma_2`.
pub fn bend_hnn(g: &GroupData, nu: Quaternion) -> Result<GroupData, GeomError> {
    if g.kind != DecompositionKind::Hnn {
        return Err(GeomError::WrongKind("hnn"));
    }
    if !axis_is_standard(&g.axis.g)? {
        return Err(GeomError::NonStandardAxis);
    }
    let u = rotation_u(nu, g.dim())?;
    let gamma2 = g.gamma2.iter().map(|h| Generator::new(h.name.clone(), u.compose(&h.g))).collect();
    Ok(GroupData { kind: g.kind, axis: g.axis.clone(), gamma1: g.gamma1.clone(), gamma2 })
}

/// Bends according to the decomposition kind.
pub fn bend(g: &GroupData, nu: Quaternion) -> Result<GroupData, GeomError> {
    match g.kind {
        DecompositionKind::Amalgam => bend_amalgam(g, nu),
        DecompositionKind::Hnn => bend_hnn(g, nu),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixedPoints {
    pub attracting: BallPoint,
    pub repelling: BallPoint,
    /// Modulus of the dominant eigenvalue, `e^{l/2}` for translation length `l`.
    pub multiplier: f64,
}

/// Dominant projective fixed point of `x -> x M` and the modulus of its eigenvalue.
fn dominant_fixed_point(m: &QMatrix) -> Result<(HVector, f64), GeomError> {
    let mut p = m.scale(1.0 / m.max_abs());
    for _ in 0..40 {
        p = p.matmul(&p);
        let s = p.max_abs();
        if !(s.is_finite() && s > 0.0) {
            return Err(GeomError::NotLoxodromic("power iteration broke down"));
        }
        p = p.scale(1.0 / s);
    }
    let best = (0..p.rows())
        .max_by(|&a, &b| {
            let na: f64 = p.row(a).iter().map(|c| c.norm_sqr()).sum();
            let nb: f64 = p.row(b).iter().map(|c| c.norm_sqr()).sum();
            na.total_cmp(&nb)
        })
        .expect("nonempty matrix");
    let mut v = HVector::new(p.row(best).to_vec()).normalized_euclid();
    for _ in 0..3 {
        v = HVector::new(m.left_apply(&v.coords)).normalized_euclid();
    }
    let w = HVector::new(m.left_apply(&v.coords));
    let k = (0..v.len()).max_by(|&a, &b| v.coords[a].norm().total_cmp(&v.coords[b].norm())).expect("nonempty");
    let lambda = w.coords[k] * v.coords[k].inv();
    let resid = (&w - &v.scale_left(lambda)).euclid_norm() / w.euclid_norm();
    if resid > 1e-6 {
        return Err(GeomError::NotLoxodromic("no dominant eigenline"));
    }
    Ok((v, lambda.norm()))
}

/// Attracting and repelling fixed points of a loxodromic isometry.
pub fn fixed_points(g: &Isometry) -> Result<FixedPoints, GeomError> {
    let (v, mult) = dominant_fixed_point(g.matrix())?;
    if mult <= 1.0 + tol::LOXODROMY {
        return Err(GeomError::NotLoxodromic("spectral radius is 1"));
    }
    if v.norm_form().abs() > 1e-6 {
        return Err(GeomError::NotLoxodromic("dominant eigenline is not null"));
    }
    let (w, _) = dominant_fixed_point(g.inverse().matrix())?;
    let not_boundary = |_| GeomError::NotLoxodromic("fixed points are not on the boundary");
    let attracting = BallPoint::from_lift(&v).map_err(not_boundary)?;
    let repelling = BallPoint::from_lift(&w).map_err(not_boundary)?;
    if !attracting.is_boundary() || !repelling.is_boundary() {
        return Err(GeomError::NotLoxodromic("fixed points are not on the boundary"));
    }
    // parabolic elements pass the spectral test up to rounding but have a
    // single fixed point
    if attracting.euclid_dist(&repelling) < 1e-6 {
        return Err(GeomError::NotLoxodromic("attracting and repelling points coincide"));
    }
    Ok(FixedPoints { attracting, repelling, multiplier: mult })
}

/// `d(x, g x)` for the point `x` of the axis closest to the origin-side
/// parametrization origin.
pub fn translation_length(g: &Isometry) -> Result<f64, GeomError> {
    Ok(translation_length_report(g)?.at_axis_point)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TranslationReport {
    /// Displacement of the axis point at parameter `0`.
    pub at_axis_point: f64,
    /// Smallest displacement over axis points at parameters `-2, -1, ..., 2`.
    pub min_sampled: f64,
}

pub fn translation_length_report(g: &Isometry) -> Result<TranslationReport, GeomError> {
    let fp = fixed_points(g)?;
    let axis = Geodesic::from_endpoints(&fp.repelling, &fp.attracting)?;
    let disp = |s: f64| -> Result<f64, GeomError> {
        let x = axis.point(s)?;
        distance(&x, &g.apply(&x)?)
    };
    let at = disp(0.0)?;
    let mut min = at;
    for s in [-2.0, -1.0, 1.0, 2.0] {
        min = min.min(disp(s)?);
    }
    Ok(TranslationReport { at_axis_point: at, min_sampled: min })
}

/// Minimum of a unimodal function on `[a, b]` by golden-section search.
fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let (mut c, mut d) = (b - r * (b - a), a + r * (b - a));
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..120 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    fc.min(fd)
}

/// Distance between the axes of two loxodromic elements.
///
/// The distance to a geodesic is convex along another geodesic, so it is
/// minimized by golden-section search over the arc length of the first axis.
pub fn axis_distance(g: &Isometry, h: &Isometry) -> Result<f64, GeomError> {
    let fg = fixed_points(g)?;
    let fh = fixed_points(h)?;
    let a = Geodesic::from_endpoints(&fg.repelling, &fg.attracting)?;
    let b = Geodesic::from_endpoints(&fh.repelling, &fh.attracting)?;
    let f = |s: f64| a.point(s).and_then(|p| distance_to_geodesic(&p, &b)).unwrap_or(f64::INFINITY);
    let m = golden_min(f, -30.0, 30.0);
    if !m.is_finite() {
        return Err(GeomError::Domain("axes could not be compared"));
    }
    Ok(m)
}

/// Smallest distance from the bending axis to the axes of the other generators.
pub fn generator_separation(g: &GroupData) -> Result<f64, GeomError> {
    let mut best = f64::INFINITY;
    for h in g.gamma1.iter().chain(&g.gamma2) {
        best = best.min(axis_distance(&g.axis.g, &h.g)?);
    }
    Ok(best)
}

/// Cygan distance from a boundary point to the real circle
/// `{[x e_1, 0]} ∪ {infinity}` of the embedded Fuchsian plane.
pub fn cygan_offset_to_real_circle(p: &BallPoint) -> Result<f64, GeomError> {
    let (z, t) = match ball_to_boundary(p)? {
        BoundaryCoord::Infinity => return Ok(0.0),
        BoundaryCoord::Finite { z, t } => (z, t),
    };
    if z.is_empty() {
        return Err(GeomError::Domain("the real circle needs dimension at least 2"));
    }
    // the fourth power is convex in x, and the distance is at least |x - Re z_1|
    let fourth = |x: f64| {
        let h: f64 = z.iter().enumerate().map(|(i, c)| if i == 0 { (*c - Quaternion::real(x)).norm_sqr() } else { c.norm_sqr() }).sum();
        h * h + (t + z[0].im().scale(2.0 * x)).norm_sqr()
    };
    let a = z[0].re();
    let r = fourth(a).sqrt().sqrt();
    Ok(golden_min(fourth, a - r, a + r).min(fourth(a)).max(0.0).sqrt().sqrt())
}

/// `sinh(eps/4) sinh(delta/2) <= 1/2`.
pub fn collar_check(eps: f64, delta: f64) -> Result<bool, GeomError> {
    Ok(collar_product(eps, delta)? <= 0.5)
}

/// `sinh(eps/4) sinh(delta/2)`.
pub fn collar_product(eps: f64, delta: f64) -> Result<f64, GeomError> {
    if !(eps > 0.0 && delta > 0.0) || !eps.is_finite() || !delta.is_finite() {
        return Err(GeomError::Domain("collar parameters must be positive"));
    }
    Ok((eps / 4.0).sinh() * (delta / 2.0).sinh())
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitSample {
    pub points: Vec<BallPoint>,
    /// Sampled words that were not loxodromic.
    pub skipped: usize,
}

/// A random reduced word of length `len` over `k` generators and their inverses.
pub fn random_reduced_word(rng: &mut impl Rng, k: usize, len: usize) -> Vec<(usize, bool)> {
    let mut w: Vec<(usize, bool)> = Vec::with_capacity(len);
    while w.len() < len {
        let letter = (rng.gen_range(0..k), rng.gen_bool(0.5));
        if let Some(&(g, inv)) = w.last() {
            if g == letter.0 && inv != letter.1 {
                continue;
            }
        }
        w.push(letter);
    }
    w
}

/// Attracting fixed points of `count` random reduced words of length
/// `1..=word_length`, deterministic in `seed`.
pub fn limit_set_sample(g: &GroupData, word_length: usize, count: usize, seed: u64) -> Result<LimitSample, GeomError> {
    if word_length == 0 {
        return Err(GeomError::Domain("word length must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = g.generators().len();
    let mut points = Vec::with_capacity(count);
    let mut skipped = 0;
    for _ in 0..count {
        let len = rng.gen_range(1..=word_length);
        let w = random_reduced_word(&mut rng, k, len);
        match fixed_points(&g.eval_word(&w)?) {
            Ok(fp) => points.push(fp.attracting),
            Err(GeomError::NotLoxodromic(_)) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(LimitSample { points, skipped })
}

/// The marker triple `(x1, (0,...,0,1), fix+(gamma_2))`, where `x1` is the
/// attracting fixed point of the first `Gamma_1` generator (required on the
/// negative side of the axis) and `gamma_2` the first bent generator.
pub fn marker_triple(g: &GroupData) -> Result<Triple, GeomError> {
    let a = g.gamma1.first().ok_or(GeomError::Domain("Gamma_1 has no generator"))?;
    let b = g.gamma2.first().ok_or(GeomError::Domain("Gamma_2 has no generator"))?;
    let x1 = fixed_points(&a.g)?.attracting;
    if x1.coords()[0].re() >= 0.0 {
        return Err(GeomError::Domain("Gamma_1 limit point is not on the negative side of the axis"));
    }
    let o = BallPoint::on_last_axis(g.dim(), Quaternion::ONE)?;
    let x2 = fixed_points(&b.g)?.attracting;
    Triple::new(x1, o, x2)
}

/// Cartan angular invariant of the marker triple.
pub fn marker_invariant(g: &GroupData) -> Result<AngularValue, GeomError> {
    cartan_angular(&marker_triple(g)?)
}

/// Indices of `H^4_R` inside `R^{8,1}`: the first four coordinates and the
/// negative one.
const H4: [usize; 5] = [0, 1, 2, 3, 8];
/// Coordinates rotated by the bending rotations: the normal directions of `P`.
const NORMAL_P: [usize; 5] = [3, 4, 5, 6, 7];

/// Generators in `O(8,1)` preserving `H^4_R`, split along the hyperplane
/// `P = span(e_1, e_2, e_3)` of `H^4_R`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealBendData {
    pub gamma_p: Isometry,
    pub gamma1: Vec<Isometry>,
    pub gamma2: Vec<Isometry>,
}

fn preserves_h4(g: &Isometry) -> bool {
    let m = g.matrix();
    let outside = [4usize, 5, 6, 7];
    H4.iter().all(|&i| outside.iter().all(|&j| m[(i, j)].norm() <= 1e-12 && m[(j, i)].norm() <= 1e-12))
}

impl RealBendData {
    pub fn new(gamma_p: Isometry, gamma1: Vec<Isometry>, gamma2: Vec<Isometry>) -> Result<Self, GeomError> {
        for g in std::iter::once(&gamma_p).chain(&gamma1).chain(&gamma2) {
            if g.dim() != 8 {
                return Err(GeomError::DimensionMismatch { expected: 8, got: g.dim() });
            }
            if !g.is_real(1e-14) {
                return Err(GeomError::Domain("real bending needs real matrices"));
            }
            let r = g.form_residual();
            if r.is_nan() || r > tol::ISOMETRY {
                return Err(GeomError::NotIsometry(r));
            }
            if !preserves_h4(g) {
                return Err(GeomError::NotPreservingSubspace);
            }
        }
        Ok(Self { gamma_p, gamma1, gamma2 })
    }

    /// Largest form residual over all generators.
    pub fn max_form_residual(&self) -> f64 {
        std::iter::once(&self.gamma_p)
            .chain(&self.gamma1)
            .chain(&self.gamma2)
            .map(Isometry::form_residual)
            .fold(0.0, f64::max)
    }
}

/// Rotation by `angle` in the plane `(i, j)` of `R^5`.
pub fn so5_plane_rotation(angle: f64, i: usize, j: usize) -> [[f64; 5]; 5] {
    let mut r = [[0.0; 5]; 5];
    for (k, row) in r.iter_mut().enumerate() {
        row[k] = 1.0;
    }
    let (c, s) = (angle.cos(), angle.sin());
    r[i][i] = c;
    r[i][j] = s;
    r[j][i] = -s;
    r[j][j] = c;
    r
}

/// The isometry of `H^8_R` acting by `rot` on the normal space of `P`.
pub fn normal_rotation(rot: &[[f64; 5]; 5]) -> Result<Isometry, GeomError> {
    let mut m = QMatrix::identity(9);
    for (a, &i) in NORMAL_P.iter().enumerate() {
        for (b, &j) in NORMAL_P.iter().enumerate() {
            m[(i, j)] = Quaternion::real(rot[a][b]);
        }
    }
    let g = Isometry::from_matrix_unchecked(m);
    let r = g.form_residual();
    if r.is_nan() || r > 1e-12 {
        return Err(GeomError::Domain("rotation is not orthogonal"));
    }
    Ok(g)
}

/// Bends `H^4_R` along `P` inside `H^8_R`: `Gamma_2` is conjugated by the
/// rotation `rot` of the normal space of `P`.
pub fn real_bend_octonion_line(d: &RealBendData, rot: &[[f64; 5]; 5]) -> Result<RealBendData, GeomError> {
    let u = normal_rotation(rot)?;
    // the rotation must centralize the stabilizer of P
    if u.compose(&d.gamma_p).max_abs_diff(&d.gamma_p.compose(&u)) > 1e-10 {
        return Err(GeomError::NonStandardAxis);
    }
    Ok(RealBendData {
        gamma_p: d.gamma_p.clone(),
        gamma1: d.gamma1.clone(),
        gamma2: d.gamma2.iter().map(|g| u.conjugate(g)).collect(),
    })
}

/// Euclidean distance of a point of the unit sphere of `R^8` from the
/// boundary sphere of `H^4_R`.
pub fn distance_from_h4_boundary(p: &BallPoint) -> f64 {
    p.coords()[4..].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn mobius_matrices_act_on_the_real_circle() {
        let (a, b, c, d) = (2.0, 1.0, 3.0, 2.0);
        let g = embed_fuchsian(&mobius_to_o21(a, b, c, d).unwrap()).unwrap();
        for x in [-2.0, -0.3, 0.0, 0.7, 5.0] {
            let img = g.apply(&real_boundary_point(x)).unwrap();
            let expected = real_boundary_point((a * x + b) / (c * x + d));
            assert!(img.euclid_dist(&expected) < 1e-13, "x = {x}");
        }
        assert_eq!(embed_fuchsian(&mobius_to_o21(1.0, 0.0, 0.0, 1.0).unwrap()).unwrap(), Isometry::identity(2));
    }

    #[test]
    fn dilation_is_an_axis_translation() {
        let r: f64 = 0.3;
        // x -> e^{-r} x contracts towards 0, which sits at (0, 1)
        let g = embed_fuchsian(&mobius_to_o21((-r / 2.0).exp(), 0.0, 0.0, (r / 2.0).exp()).unwrap()).unwrap();
        assert!(g.max_abs_diff(&Isometry::axis_translation(2, r)) < 1e-14);
    }

    #[test]
    fn embed_rejects_non_isometries() {
        assert!(embed_fuchsian(&[[2.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]).is_err());
    }

    #[test]
    fn rotation_u_examples() {
        assert_eq!(rotation_u(Quaternion::ONE, 2).unwrap(), Isometry::identity(2));
        let nu = Quaternion::new(0.6, 0.0, 0.8, 0.0);
        let u = rotation_u(nu, 2).unwrap();
        let h = Quaternion::new(0.1, 0.3, 0.0, 0.2);
        let img = u.apply(&BallPoint::on_last_axis(2, h).unwrap()).unwrap();
        assert!(img.last().max_abs_diff(nu.inv() * h * nu) < 1e-15);
        for s in [-1.0, 1.0] {
            let p = BallPoint::on_last_axis(2, Quaternion::real(s)).unwrap();
            assert!(u.apply(&p).unwrap().euclid_dist(&p) < 1e-15);
        }
        assert!(rotation_u(Quaternion::real(2.0), 2).is_err());
    }

    #[test]
    fn fixed_points_and_translation_length_of_axis_translation() {
        let g = Isometry::axis_translation(2, 0.3);
        let fp = fixed_points(&g).unwrap();
        assert!(fp.attracting.euclid_dist(&BallPoint::from_real(&[0.0, 1.0]).unwrap()) < 1e-12);
        assert!(fp.repelling.euclid_dist(&BallPoint::from_real(&[0.0, -1.0]).unwrap()) < 1e-12);
        assert_abs_diff_eq!(translation_length(&g).unwrap(), 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(translation_length(&g.pow(2)).unwrap(), 1.2, epsilon = 1e-12);
    }

    #[test]
    fn elliptic_and_parabolic_elements_are_rejected() {
        let e = Isometry::rotation(2, 0, 1, 0.4);
        assert!(matches!(fixed_points(&e), Err(GeomError::NotLoxodromic(_))));
        assert!(matches!(fixed_points(&Isometry::identity(2)), Err(GeomError::NotLoxodromic(_))));
        let p = embed_fuchsian(&mobius_to_o21(1.0, 1.0, 0.0, 1.0).unwrap()).unwrap();
        assert!(matches!(fixed_points(&p), Err(GeomError::NotLoxodromic(_))));
    }

    #[test]
    fn axis_distance_of_the_schottky_example() {
        let g = examples::fuchsian_amalgam(0.5).unwrap();
        let [(c1, r1), (c2, r2)] = examples::SCHOTTKY_DISCS;
        // fixed points of x -> c2 - r1 r2 / (x - c1)
        let (s, p) = (c1 + c2, c1 * c2 + r1 * r2);
        let disc = (s * s - 4.0 * p).sqrt();
        let (x1, x2) = ((s - disc) / 2.0, (s + disc) / 2.0);
        let d = axis_distance(&g.axis.g, &g.gamma1[0].g).unwrap();
        let expected = examples::axis_separation(x2.abs(), x1.abs());
        assert!((d - expected).abs() < 1e-8, "{d} vs {expected}");
        let shifted = Isometry::axis_translation(2, 0.3);
        assert!(axis_distance(&shifted, &g.axis.g).unwrap() < 1e-6);
    }

    #[test]
    fn cygan_offset_vanishes_on_the_real_circle() {
        for x in [-3.0, -0.2, 0.0, 0.7, 12.0] {
            assert!(cygan_offset_to_real_circle(&real_boundary_point(x)).unwrap() < 1e-7);
        }
        // [i, 0] is at Cygan distance |(|i - x|^2)^2 + 4x^2|^{1/4} >= 1, attained at x = 0
        let p = crate::models::boundary_to_ball(&[Quaternion::I], Quaternion::ZERO).unwrap();
        assert!((cygan_offset_to_real_circle(&p).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn collar_examples() {
        assert!(collar_check(0.5, 63f64.ln()).unwrap());
        assert_abs_diff_eq!(collar_product(0.5, 63f64.ln()).unwrap(), 0.4895, epsilon = 1e-3);
        assert!(collar_check(1e-9, 30.0).unwrap());
        assert!(!collar_check(2.0, 10.0).unwrap());
        assert!(collar_check(0.0, 1.0).is_err());
        assert!(collar_check(1.0, -1.0).is_err());
    }

    #[test]
    fn so5_rotation_is_orthogonal() {
        let r = so5_plane_rotation(0.7, 0, 3);
        assert!(normal_rotation(&r).is_ok());
        let mut bad = r;
        bad[0][0] = 2.0;
        assert!(normal_rotation(&bad).is_err());
    }
}
