//! Seeded property suites with residual reports.
//!
//! Each suite samples its inputs from a `ChaCha8` stream seeded by the
//! caller, so a report is reproducible from `(suite, seed, count)`.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{associator, o_mul, unit_rotation, ImaginaryDirection, Octonion, Quaternion};
use crate::error::GeomError;
use crate::geometry::{
    bisector_contains, dist_to_spine, distance_to_geodesic, move_to_standard, project_to_fline, pythagoras_check, Bisector,
    FLine, Geodesic,
};
use crate::groups::examples::{fuchsian_amalgam, real_bend_example, schottky_separation};
use crate::groups::{
    bend, collar_product, fixed_points, limit_set_sample, marker_invariant, random_reduced_word,
    real_bend_octonion_line, so5_plane_rotation, distance_from_h4_boundary, translation_length, GroupData,
};
use crate::hermitian::{BallPoint, Triple, PERMUTATIONS};
use crate::invariants::{
    cartan_angular, character_eval, octonion_angular, toledo, triangle_area_gb, triple_isometry, ClosureMode,
    TriangulatedCycle, TERM_BOUND,
};
use crate::isometry::Isometry;
use crate::models::{
    ball_to_boundary, boundary_coord_to_ball, boundary_to_ball, carnot_inv, carnot_mul, cygan_dist, cygan_norm,
    BoundaryCoord, CarnotElement, CarnotPoint,
};
use crate::sampling::{
    random_boundary_point, random_boundary_triple, random_interior_point, random_isometry, random_octonion,
    random_quaternion, random_unit_quaternion, Field,
};

/// Suite names accepted by [`run_suite`], besides `all`.
pub const SUITES: [&str; 11] = [
    "cartan",
    "spine",
    "characterization",
    "toledo",
    "isometry",
    "bisector",
    "carnot",
    "bending",
    "octonion",
    "character",
    "realbend",
];

/// Which side of the threshold a passing value lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// `value <= threshold`.
    AtMost,
    /// `value > threshold`.
    Above,
}

impl Bound {
    pub fn symbol(self) -> &'static str {
        match self {
            Bound::AtMost => "<=",
            Bound::Above => ">",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    /// Worst value over the samples (largest for `AtMost`, smallest for `Above`).
    pub value: f64,
    pub threshold: f64,
    pub bound: Bound,
    pub samples: usize,
    pub passed: bool,
    /// First error raised while sampling, if any; such a check fails.
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs one suite. `count` overrides the default sample size of the suite.
pub fn run_suite(name: &str, seed: u64, count: Option<usize>) -> Result<SuiteReport, GeomError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    let checks = match name {
        "cartan" => cartan_suite(rng, count.unwrap_or(1000)),
        "spine" => spine_suite(rng, count.unwrap_or(1000)),
        "characterization" => characterization_suite(rng, count.unwrap_or(100)),
        "toledo" => toledo_suite(rng, count.unwrap_or(500)),
        "isometry" => isometry_suite(rng, count.unwrap_or(100)),
        "bisector" => bisector_suite(rng, count.unwrap_or(1000)),
        "carnot" => carnot_suite(rng, count.unwrap_or(1000)),
        "bending" => bending_suite(seed, count.unwrap_or(200)),
        "octonion" => octonion_suite(rng, count.unwrap_or(10_000)),
        "character" => character_suite(rng, count.unwrap_or(1000)),
        "realbend" => realbend_suite(rng, count.unwrap_or(100)),
        other => return Err(GeomError::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport { name: name.to_string(), seed, checks })
}

/// Runs `name`, or every suite in [`SUITES`] order for `all`.
pub fn run_suites(name: &str, seed: u64, count: Option<usize>) -> Result<Vec<SuiteReport>, GeomError> {
    if name == "all" {
        SUITES.iter().map(|s| run_suite(s, seed, count)).collect()
    } else {
        Ok(vec![run_suite(name, seed, count)?])
    }
}

/// Worst value of a sampled quantity.
struct Acc {
    bound: Bound,
    worst: Option<f64>,
    samples: usize,
    error: Option<String>,
}

impl Acc {
    fn at_most() -> Self {
        Self { bound: Bound::AtMost, worst: None, samples: 0, error: None }
    }

    fn above() -> Self {
        Self { bound: Bound::Above, worst: None, samples: 0, error: None }
    }

    fn push(&mut self, r: Result<f64, GeomError>) {
        self.samples += 1;
        match r {
            Ok(x) if x.is_nan() => {
                self.error.get_or_insert_with(|| "NaN value".to_string());
            }
            Ok(x) => {
                self.worst = Some(match (self.worst, self.bound) {
                    (None, _) => x,
                    (Some(w), Bound::AtMost) => w.max(x),
                    (Some(w), Bound::Above) => w.min(x),
                })
            }
            Err(e) => {
                self.error.get_or_insert_with(|| e.to_string());
            }
        }
    }

    fn finish(self, name: &str, threshold: f64) -> CheckResult {
        let value = self.worst.unwrap_or(f64::NAN);
        let ok = match self.bound {
            Bound::AtMost => value <= threshold,
            Bound::Above => value > threshold,
        };
        CheckResult {
            name: name.to_string(),
            value,
            threshold,
            bound: self.bound,
            samples: self.samples,
            passed: ok && self.error.is_none(),
            error: self.error,
        }
    }
}

fn single(name: &str, bound: Bound, threshold: f64, r: Result<f64, GeomError>) -> CheckResult {
    let mut acc = Acc { bound, worst: None, samples: 0, error: None };
    acc.push(r);
    acc.finish(name, threshold)
}

fn map_triple(g: &Isometry, x: &Triple) -> Result<Triple, GeomError> {
    Triple::new(g.apply(&x.p1)?, g.apply(&x.p2)?, g.apply(&x.p3)?)
}

fn standard_triple(third: Vec<Quaternion>) -> Result<Triple, GeomError> {
    let n = third.len();
    Triple::new(
        BallPoint::on_last_axis(n, Quaternion::real(-1.0))?,
        BallPoint::on_last_axis(n, Quaternion::ONE)?,
        BallPoint::new(third)?,
    )
}

/// Three boundary points of the standard quaternionic line `{(0, h)}` in `H^2`.
fn hline_triple(rng: &mut impl Rng) -> Result<Triple, GeomError> {
    loop {
        let h = [0, 1, 2].map(|_| random_unit_quaternion(rng));
        if (h[0] - h[1]).norm() > 0.05 && (h[1] - h[2]).norm() > 0.05 && (h[2] - h[0]).norm() > 0.05 {
            return Triple::new(
                BallPoint::on_last_axis(2, h[0])?,
                BallPoint::on_last_axis(2, h[1])?,
                BallPoint::on_last_axis(2, h[2])?,
            );
        }
    }
}

fn rel_residual(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(1.0)
}

fn cartan_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let triples: Vec<Triple> = (0..count).map(|_| random_boundary_triple(rng, 2, Field::Quaternion)).collect();
    let mut perm = Acc::at_most();
    let mut toledo_perm = Acc::at_most();
    for x in &triples {
        perm.push((|| {
            let a = cartan_angular(x)?.value();
            let mut w: f64 = 0.0;
            for p in PERMUTATIONS {
                w = w.max((cartan_angular(&x.permuted(p))?.value() - a).abs());
            }
            Ok(w)
        })());
        toledo_perm.push((|| Ok((toledo(x)? - toledo(&x.permuted([2, 0, 1]))?).abs()))());
    }
    let mut inv = Acc::at_most();
    for x in triples.iter().take(100) {
        let g = random_isometry(rng, 2, Field::Quaternion, 1.5);
        inv.push((|| Ok((cartan_angular(&map_triple(&g, x)?)?.value() - cartan_angular(x)?.value()).abs()))());
    }
    vec![
        perm.finish("permutation_symmetry", 1e-11),
        toledo_perm.finish("toledo_cyclic_symmetry", 1e-11),
        inv.finish("isometry_invariance", 1e-10),
    ]
}

/// `sinh` of the distance from the projection of `x3` onto the line of
/// `x1`, `x2` to the geodesic `x1 x2`, computed without standard position.
fn spine_sinh_oracle(x: &Triple) -> Result<f64, GeomError> {
    let l = FLine::through(&x.p1, &x.p2)?;
    let w = project_to_fline(&l, &x.p3)?;
    let g = Geodesic::from_endpoints(&x.p1, &x.p2)?;
    Ok(distance_to_geodesic(&w, &g)?.sinh())
}

fn spine_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let mut ident = Acc::at_most();
    let mut oracle = Acc::at_most();
    for _ in 0..count {
        let x = random_boundary_triple(rng, 2, Field::Quaternion);
        ident.push((|| Ok(rel_residual(cartan_angular(&x)?.tan(), dist_to_spine(&x)?.sinh())))());
        oracle.push((|| Ok(rel_residual(cartan_angular(&x)?.tan(), spine_sinh_oracle(&x)?)))());
    }
    // third point (sqrt(3)/2, i/2): tan A = 4/3
    let worked = standard_triple(vec![Quaternion::real(0.75f64.sqrt()), Quaternion::new(0.0, 0.5, 0.0, 0.0)]);
    let tan = worked.clone().and_then(|x| Ok((cartan_angular(&x)?.tan() - 4.0 / 3.0).abs()));
    let spine = worked.and_then(|x| Ok((dist_to_spine(&x)?.sinh() - 4.0 / 3.0).abs()));
    vec![
        ident.finish("tan_equals_sinh_spine_distance", 1e-9),
        oracle.finish("tan_equals_sinh_projected_distance", 1e-9),
        single("worked_value_tan", Bound::AtMost, 1e-12, tan),
        single("worked_value_spine", Bound::AtMost, 1e-12, spine),
    ]
}

fn characterization_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let mut real_a = Acc::at_most();
    let mut real_conv = Acc::at_most();
    let mut line_a = Acc::at_most();
    let mut line_conv = Acc::at_most();
    for _ in 0..count {
        let g = random_isometry(rng, 2, Field::Quaternion, 1.5);
        let base = random_boundary_triple(rng, 2, Field::Real);
        let x = map_triple(&g, &base);
        real_a.push(x.clone().and_then(|x| Ok(cartan_angular(&x)?.value())));
        real_conv.push(x.and_then(|x| {
            if cartan_angular(&x)?.value() >= 1e-9 {
                return Err(GeomError::Domain("constructed real-plane triple has a nonzero invariant"));
            }
            let s = move_to_standard(&x.p1, &x.p2)?;
            Ok(s.apply(&x.p3)?.last().im_norm())
        }));

        let g = random_isometry(rng, 2, Field::Quaternion, 1.5);
        let x = hline_triple(rng).and_then(|t| map_triple(&g, &t));
        line_a.push(x.clone().and_then(|x| Ok((cartan_angular(&x)?.value() - FRAC_PI_2).abs())));
        line_conv.push(x.and_then(|x| {
            if (cartan_angular(&x)?.value() - FRAC_PI_2).abs() >= 1e-9 {
                return Err(GeomError::Domain("constructed line triple has an invariant away from pi/2"));
            }
            let s = move_to_standard(&x.p1, &x.p2)?;
            let y = s.apply(&x.p3)?;
            let c = y.coords();
            Ok(c[..c.len() - 1].iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt())
        }));
    }
    vec![
        real_a.finish("real_plane_invariant_zero", 1e-9),
        real_conv.finish("zero_invariant_on_real_circle", 1e-9),
        line_a.finish("line_invariant_right_angle", 1e-9),
        line_conv.finish("right_angle_invariant_on_line", 1e-9),
    ]
}

fn toledo_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let mut gb = Acc::at_most();
    for _ in 0..count {
        let x = random_boundary_triple(rng, 2, Field::Quaternion);
        gb.push((|| {
            let l = FLine::through(&x.p1, &x.p2)?;
            let w = project_to_fline(&l, &x.p3)?;
            Ok((triangle_area_gb(&x.p1, &x.p2, &w, &l)? - toledo(&x)?).abs())
        })());
    }
    let ideal = standard_triple(vec![Quaternion::ZERO, Quaternion::I]).and_then(|x| Ok((toledo(&x)? - PI).abs()));
    let mut ideal_random = Acc::at_most();
    for _ in 0..count.min(100) {
        let g = random_isometry(rng, 2, Field::Quaternion, 1.5);
        ideal_random.push(hline_triple(rng).and_then(|t| map_triple(&g, &t)).and_then(|x| Ok((toledo(&x)? - PI).abs())));
    }
    vec![
        gb.finish("gauss_bonnet_area_equals_toledo", 1e-7),
        single("ideal_line_triangle_toledo", Bound::AtMost, 1e-9, ideal),
        ideal_random.finish("random_line_triangles_toledo", 1e-9),
    ]
}

fn isometry_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let mut matched = Acc::at_most();
    let mut form = Acc::at_most();
    let mut rejected = Acc::at_most();
    for _ in 0..count {
        let x = random_boundary_triple(rng, 2, Field::Quaternion);
        let g = random_isometry(rng, 2, Field::Quaternion, 1.5);
        let r = map_triple(&g, &x).and_then(|y| {
            let f = triple_isometry(&x, &y)?.ok_or(GeomError::Domain("no isometry found for an isometric pair"))?;
            let mut w: f64 = 0.0;
            for (p, q) in x.points().iter().zip(y.points()) {
                w = w.max(f.apply(p)?.euclid_dist(q));
            }
            Ok((w, f.form_residual()))
        });
        matched.push(r.clone().map(|t| t.0));
        form.push(r.map(|t| t.1));

        let real = random_boundary_triple(rng, 2, Field::Real);
        rejected.push(hline_triple(rng).and_then(|h| Ok(if triple_isometry(&real, &h)?.is_some() { 1.0 } else { 0.0 })));
    }
    vec![
        matched.finish("matching_isometry_maps_triple", 1e-8),
        form.finish("matching_isometry_form_residual", 1e-9),
        rejected.finish("unequal_invariants_rejected", 0.0),
    ]
}

/// Interior point of `H^n` with norm at most `r`, kept a little away from the origin.
fn interior(rng: &mut impl Rng, n: usize, r: f64) -> BallPoint {
    random_interior_point(rng, n, Field::Quaternion, r)
}

fn random_imaginary(rng: &mut impl Rng, max_norm: f64) -> Quaternion {
    let d = loop {
        let q = random_quaternion(rng).im();
        if q.norm() > 1e-3 {
            break q.normalize();
        }
    };
    d.scale(rng.gen::<f64>() * max_norm)
}

/// Distance between the projection of the midpoint of a bisector chord and
/// the geodesic joining the projections of its ends.
///
/// Centers `(0, -1/2)`, `(0, 1/2)`; the chord ends `(0.3, 0.2i)` and
/// `(0.3j, -0.4i)` lie on the bisector and have a non-real form value, so
/// the projected chord leaves the spine.
pub fn non_geodesic_projection_witness() -> Result<f64, GeomError> {
    let z1 = BallPoint::on_last_axis(2, Quaternion::real(-0.5))?;
    let z2 = BallPoint::on_last_axis(2, Quaternion::real(0.5))?;
    let p = BallPoint::new(vec![Quaternion::real(0.3), Quaternion::new(0.0, 0.2, 0.0, 0.0)])?;
    let q = BallPoint::new(vec![Quaternion::new(0.0, 0.0, 0.3, 0.0), Quaternion::new(0.0, -0.4, 0.0, 0.0)])?;
    let b = Bisector::new(z1, z2)?;
    if bisector_contains(&b, &p)?.abs() > 1e-12 || bisector_contains(&b, &q)?.abs() > 1e-12 {
        return Err(GeomError::Domain("witness chord is not on the bisector"));
    }
    let spine = b.complex_spine()?;
    let chord = Geodesic::through(&p, &q)?;
    let mid = chord.point(crate::hermitian::distance(&p, &q)? / 2.0)?;
    let image = Geodesic::through(&project_to_fline(&spine, &p)?, &project_to_fline(&spine, &q)?)?;
    distance_to_geodesic(&project_to_fline(&spine, &mid)?, &image)
}

fn bisector_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let mut slice = Acc::at_most();
    let mut proj = Acc::at_most();
    let mut pyth = Acc::at_most();
    for _ in 0..count {
        let z1 = interior(rng, 2, 0.7);
        let z2 = interior(rng, 2, 0.7);
        let h = random_imaginary(rng, 0.6);
        let ymax = 0.95 * (1.0 - h.norm_sqr()).sqrt();
        let y = random_unit_quaternion(rng).scale(rng.gen::<f64>() * ymax);
        let pt = Bisector::new(z1, z2).and_then(|b| Ok((b.slice_point(&[y], h)?, b)));
        slice.push(pt.clone().and_then(|(p, b)| Ok(bisector_contains(&b, &p)?.abs())));
        proj.push(pt.and_then(|(p, b)| {
            let s = project_to_fline(&b.complex_spine()?, &p)?;
            Ok(s.euclid_dist(&b.spine_at(h)?).max(bisector_contains(&b, &s)?.abs()))
        }));

        let a = interior(rng, 2, 0.8);
        let c = interior(rng, 2, 0.8);
        let p = interior(rng, 2, 0.8);
        let other = interior(rng, 2, 0.8);
        pyth.push((|| {
            let l = FLine::through(&a, &c)?;
            let s = project_to_fline(&l, &other)?;
            pythagoras_check(&p, &l, &s)
        })());
    }
    vec![
        slice.finish("slice_points_on_bisector", 1e-9),
        proj.finish("slice_projects_to_spine_point", 1e-9),
        pyth.finish("pythagorean_identity", 1e-9),
        single("non_geodesic_projection_witness", Bound::Above, 1e-3, non_geodesic_projection_witness()),
    ]
}

fn random_carnot(rng: &mut impl Rng) -> CarnotElement {
    CarnotElement { xi: vec![random_quaternion(rng)], v: random_quaternion(rng).im() }
}

fn element_diff(a: &CarnotElement, b: &CarnotElement) -> f64 {
    let mut w = a.v.max_abs_diff(b.v);
    for (x, y) in a.xi.iter().zip(&b.xi) {
        w = w.max(x.max_abs_diff(*y));
    }
    w
}

fn dilate_element(a: &CarnotElement, r: f64) -> CarnotElement {
    CarnotElement { xi: a.xi.iter().map(|c| c.scale(r)).collect(), v: a.v.scale(r * r) }
}

fn random_carnot_point(rng: &mut impl Rng) -> CarnotPoint {
    let e = random_carnot(rng);
    CarnotPoint { xi: e.xi, v: e.v, u: rng.gen::<f64>() * 2.0 }
}

fn carnot_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let mut axioms = Acc::at_most();
    let mut center = Acc::at_most();
    let mut dilation = Acc::at_most();
    let mut triangle = Acc::at_most();
    let mut translation = Acc::at_most();
    let mut round_trip = Acc::at_most();
    let id = CarnotElement::identity(1);
    for _ in 0..count {
        let (a, b, c) = (random_carnot(rng), random_carnot(rng), random_carnot(rng));
        let assoc = element_diff(&carnot_mul(&carnot_mul(&a, &b), &c), &carnot_mul(&a, &carnot_mul(&b, &c)));
        let unit = element_diff(&carnot_mul(&a, &id), &a).max(element_diff(&carnot_mul(&id, &a), &a));
        let inverse = element_diff(&carnot_mul(&a, &carnot_inv(&a)), &id).max(element_diff(&carnot_mul(&carnot_inv(&a), &a), &id));
        axioms.push(Ok(assoc.max(unit).max(inverse)));

        let z = CarnotElement { xi: vec![Quaternion::ZERO], v: c.v };
        center.push(Ok(element_diff(&carnot_mul(&z, &a), &carnot_mul(&a, &z))));

        let r = (rng.gen::<f64>() * 4.0 - 2.0).exp();
        let hom = element_diff(&dilate_element(&carnot_mul(&a, &b), r), &carnot_mul(&dilate_element(&a, r), &dilate_element(&b, r)));
        let p = random_carnot_point(rng);
        let norm = rel_residual(r * cygan_norm(&p), cygan_norm(&p.dilate(r)));
        dilation.push(Ok(hom.max(norm)));

        let (q, s) = (random_carnot_point(rng), random_carnot_point(rng));
        triangle.push(Ok(cygan_dist(&p, &s) - cygan_dist(&p, &q) - cygan_dist(&q, &s)));
        translation.push(Ok((cygan_dist(&p.translate(&c), &q.translate(&c)) - cygan_dist(&p, &q)).abs()));

        let x = random_boundary_point(rng, 2, Field::Quaternion);
        round_trip.push((|| {
            let back = boundary_coord_to_ball(&ball_to_boundary(&x)?, 2)?;
            let y = boundary_to_ball(&b.xi, b.v)?;
            let coord = match ball_to_boundary(&y)? {
                BoundaryCoord::Finite { z, t } => {
                    (z[0] - b.xi[0]).norm().max((t - b.v).norm()) / (1.0 + b.xi[0].norm_sqr() + b.v.norm())
                }
                BoundaryCoord::Infinity => f64::INFINITY,
            };
            Ok(back.euclid_dist(&x).max(coord))
        })());
    }
    let fixed = (|| {
        let zero = boundary_to_ball(&[Quaternion::ZERO], Quaternion::ZERO)?;
        let inf = boundary_coord_to_ball(&BoundaryCoord::Infinity, 2)?;
        let a = zero.euclid_dist(&BallPoint::from_real(&[0.0, 1.0])?);
        let b = inf.euclid_dist(&BallPoint::from_real(&[0.0, -1.0])?);
        Ok(a.max(b))
    })();
    vec![
        axioms.finish("group_axioms", 1e-12),
        center.finish("vertical_center", 1e-12),
        dilation.finish("dilation_homogeneity", 1e-12),
        triangle.finish("triangle_inequality", 1e-12),
        translation.finish("translation_invariance", 1e-12),
        round_trip.finish("boundary_round_trip", 1e-9),
        single("origin_and_infinity", Bound::AtMost, 0.0, fixed),
    ]
}

/// Bending parameter `e^{i eta}` for the grid used by the bending suite.
pub fn bending_grid(points: usize, max_eta: f64) -> Vec<f64> {
    (1..=points).map(|k| max_eta * k as f64 / points as f64).collect()
}

fn generators_equal(a: &GroupData, b: &GroupData) -> f64 {
    let mut w = a.axis.g.max_abs_diff(&b.axis.g);
    for (x, y) in a.gamma1.iter().zip(&b.gamma1) {
        w = w.max(x.g.max_abs_diff(&y.g));
    }
    if a.gamma1.len() != b.gamma1.len() {
        w = f64::INFINITY;
    }
    w
}

fn bending_suite(seed: u64, count: usize) -> Vec<CheckResult> {
    let eps = 0.5;
    let delta = 63f64.ln();
    let group = match fuchsian_amalgam(eps) {
        Ok(g) => g,
        Err(e) => return vec![single("example_group", Bound::AtMost, 0.0, Err(e))],
    };
    let mut out = vec![
        single("axis_translation_length", Bound::AtMost, 1e-9, translation_length(&group.axis.g).map(|l| (l - eps).abs())),
        single("axis_separation", Bound::Above, delta, Ok(schottky_separation())),
        single("collar_product", Bound::AtMost, 0.5, collar_product(eps, delta)),
    ];
    let flat = bend(&group, Quaternion::ONE);
    out.push(single("marker_at_zero", Bound::AtMost, 1e-9, flat.clone().and_then(|g| Ok(marker_invariant(&g)?.value()))));
    out.push(single(
        "limit_set_real_at_zero",
        Bound::AtMost,
        1e-8,
        flat.and_then(|g| {
            let s = limit_set_sample(&g, 8, count, seed)?;
            if s.points.is_empty() {
                return Err(GeomError::Domain("no limit points sampled"));
            }
            Ok(s.points.iter().map(BallPoint::imaginary_norm).fold(0.0, f64::max))
        }),
    ));

    let mut markers = Vec::new();
    let mut range = Acc::above();
    let mut restrict = Acc::at_most();
    let mut form = Acc::at_most();
    for eta in bending_grid(20, 0.3) {
        let nu = unit_rotation(ImaginaryDirection::I, eta);
        let bent = bend(&group, nu);
        restrict.push(bent.clone().map(|b| generators_equal(&b, &group)));
        form.push(bent.clone().map(|b| b.max_form_residual()));
        let m = bent.and_then(|b| marker_invariant(&b)).map(|a| a.value());
        range.push(m.clone().map(|a| a.min(FRAC_PI_2 - a)));
        markers.push(m.unwrap_or(f64::NAN));
    }
    let mut increasing = Acc::above();
    for w in markers.windows(2) {
        increasing.push(Ok(w[1] - w[0]));
    }
    let mut gaps = Acc::above();
    for i in 0..markers.len() {
        for j in i + 1..markers.len() {
            gaps.push(Ok((markers[i] - markers[j]).abs()));
        }
    }
    out.push(range.finish("marker_grid_in_open_range", 0.0));
    out.push(increasing.finish("marker_grid_increasing", 1e-6));
    out.push(gaps.finish("marker_grid_pairwise_gap", 1e-6));
    out.push(restrict.finish("first_factor_unchanged", 0.0));
    out.push(form.finish("bent_form_residual", 1e-9));
    out
}

fn octonion_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let mut mult = Acc::at_most();
    for _ in 0..count {
        let (x, y) = (random_octonion(rng), random_octonion(rng));
        mult.push(Ok((o_mul(x, y).norm() - x.norm() * y.norm()).abs()));
    }
    let witness = associator(Octonion::basis(1), Octonion::basis(2), Octonion::basis(4)).norm();
    let mut real_end = Acc::at_most();
    let mut unit_end = Acc::at_most();
    for _ in 0..count.min(1000) {
        let r = rng.gen_range(-0.999..0.999);
        real_end.push(octonion_angular(Octonion::real(r)).map(|a| a.value()));
        let u = loop {
            let o = random_octonion(rng);
            if o.im_norm() > 1e-3 {
                break o.scale(1.0 / o.norm());
            }
        };
        unit_end.push(octonion_angular(u).map(|a| (a.value() - FRAC_PI_2).abs()));
    }
    vec![
        mult.finish("norm_multiplicativity", 1e-12),
        single("associator_witness", Bound::Above, 0.1, Ok(witness)),
        real_end.finish("real_projection_angle_zero", 1e-12),
        unit_end.finish("unit_projection_angle_right", 1e-12),
    ]
}

fn single_face(x: &Triple) -> Result<f64, GeomError> {
    let map: HashMap<usize, BallPoint> = [(0, x.p1.clone()), (1, x.p2.clone()), (2, x.p3.clone())].into_iter().collect();
    let r = character_eval(&TriangulatedCycle::new(vec![([0, 1, 2], 1)]), &map, ClosureMode::Lenient)?;
    Ok(r.total)
}

/// Boundary of a tetrahedron, oriented so that every edge cancels.
pub fn tetrahedron_cycle() -> TriangulatedCycle {
    TriangulatedCycle::new(vec![([1, 2, 3], 1), ([0, 3, 2], 1), ([0, 1, 3], 1), ([0, 2, 1], 1)])
}

/// `|c - 4 pi sum Area|` for an ideal quadrilateral in a quaternionic line,
/// split along a diagonal. Each ideal triangle is cut into three triangles
/// with one finite vertex at an interior point, whose areas add up to it.
fn quadrilateral_consistency(g: &Isometry) -> Result<f64, GeomError> {
    let on_line = |h: Quaternion| -> Result<BallPoint, GeomError> { g.apply(&BallPoint::on_last_axis(2, h)?) };
    let rot = |t: f64| Quaternion::new(t.cos(), 0.0, t.sin() * 0.6, t.sin() * 0.8);
    let angles = [0.1, 1.7, 3.0, 4.6];
    let verts: Vec<BallPoint> = angles.iter().map(|&t| on_line(rot(t))).collect::<Result<_, _>>()?;
    let faces = [[0usize, 1, 2], [0, 2, 3]];
    let line = FLine::through(&verts[0], &verts[2])?;
    let mut area = 0.0;
    for f in faces {
        // an interior point of the ideal triangle: a tenth of the sum of
        // its vertices in the disc
        let w = on_line((rot(angles[f[0]]) + rot(angles[f[1]]) + rot(angles[f[2]])).scale(0.1))?;
        for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
            area += triangle_area_gb(&verts[a], &verts[b], &w, &line)?;
        }
    }
    let map: HashMap<usize, BallPoint> = verts.into_iter().enumerate().collect();
    let cycle = TriangulatedCycle::new(faces.iter().map(|&f| (f, 1)).collect());
    let c = character_eval(&cycle, &map, ClosureMode::Lenient)?;
    Ok((c.total - 4.0 * PI * area).abs())
}

fn character_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let mut bound = Acc::at_most();
    for _ in 0..count {
        bound.push(single_face(&random_boundary_triple(rng, 2, Field::Quaternion)).map(f64::abs));
    }
    let attained = standard_triple(vec![Quaternion::ZERO, Quaternion::I]).and_then(|x| Ok((single_face(&x)? - TERM_BOUND).abs()));
    let g = random_isometry(rng, 2, Field::Quaternion, 1.5);
    let real_cycle = (|| {
        // four well separated points of the real circle
        let map: HashMap<usize, BallPoint> = (0..4)
            .map(|k| {
                let t = k as f64 * FRAC_PI_2 + rng.gen_range(-0.5..0.5);
                Ok((k, g.apply(&BallPoint::from_real(&[t.cos(), t.sin()])?)?))
            })
            .collect::<Result<_, GeomError>>()?;
        Ok(character_eval(&tetrahedron_cycle(), &map, ClosureMode::Strict)?.total.abs())
    })();
    let g = random_isometry(rng, 2, Field::Quaternion, 1.5);
    vec![
        bound.finish("term_bound", TERM_BOUND + 1e-9),
        single("line_triangle_attains_bound", Bound::AtMost, 1e-8, attained),
        single("real_circle_cycle_vanishes", Bound::AtMost, 1e-9, real_cycle),
        single("quadrilateral_area_consistency", Bound::AtMost, 1e-8, quadrilateral_consistency(&g)),
    ]
}

/// Attracting fixed points of random reduced words in `gens`.
fn word_fixed_points(rng: &mut impl Rng, gens: &[Isometry], count: usize, max_len: usize) -> Result<Vec<BallPoint>, GeomError> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let len = rng.gen_range(1..=max_len);
        let w = random_reduced_word(rng, gens.len(), len);
        let mut g = Isometry::identity(gens[0].dim());
        for (k, inv) in w {
            g = if inv { g.compose(&gens[k].inverse()) } else { g.compose(&gens[k]) };
        }
        match fixed_points(&g) {
            Ok(fp) => out.push(fp.attracting),
            Err(GeomError::NotLoxodromic(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() {
        return Err(GeomError::Domain("no loxodromic words sampled"));
    }
    Ok(out)
}

fn realbend_suite(rng: &mut ChaCha8Rng, count: usize) -> Vec<CheckResult> {
    let base = match real_bend_example() {
        Ok(d) => d,
        Err(e) => return vec![single("example_group", Bound::AtMost, 0.0, Err(e))],
    };
    let rot = so5_plane_rotation(0.4, 0, 1);
    let bent = real_bend_octonion_line(&base, &rot);
    let second = |d: &crate::groups::RealBendData| -> Vec<Isometry> {
        std::iter::once(d.gamma_p.clone()).chain(d.gamma2.iter().cloned()).collect()
    };
    let first = |d: &crate::groups::RealBendData| -> Vec<Isometry> {
        std::iter::once(d.gamma_p.clone()).chain(d.gamma1.iter().cloned()).collect()
    };
    let max_off = |pts: Vec<BallPoint>| pts.iter().map(distance_from_h4_boundary).fold(0.0, f64::max);
    let flat = word_fixed_points(rng, &second(&base), count, 6).map(max_off);
    let unchanged = bent.clone().map(|b| {
        let mut w = b.gamma_p.max_abs_diff(&base.gamma_p);
        for (x, y) in b.gamma1.iter().zip(&base.gamma1) {
            w = w.max(x.max_abs_diff(y));
        }
        w
    });
    let first_limit = bent.clone().and_then(|b| word_fixed_points(rng, &first(&b), count, 6).map(max_off));
    let moved = bent.clone().and_then(|b| word_fixed_points(rng, &second(&b), count, 6).map(max_off));
    vec![
        single("bent_form_residual", Bound::AtMost, 1e-9, bent.map(|b| b.max_form_residual())),
        single("first_factor_unchanged", Bound::AtMost, 0.0, unchanged),
        single("unbent_limit_on_subspace", Bound::AtMost, 1e-9, flat),
        single("first_factor_limit_on_subspace", Bound::AtMost, 1e-9, first_limit),
        single("bent_limit_leaves_subspace", Bound::Above, 1e-3, moved),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert_eq!(run_suite("nosuch", 1, None).unwrap_err(), GeomError::UnknownSuite("nosuch".into()));
    }

    #[test]
    fn small_runs_pass_and_repeat() {
        for s in SUITES {
            let a = run_suite(s, 7, Some(20)).unwrap();
            for c in &a.checks {
                assert!(c.passed, "{s}/{}: {c:?}", c.name);
            }
            assert_eq!(a, run_suite(s, 7, Some(20)).unwrap());
        }
    }
}
