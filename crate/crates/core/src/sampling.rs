//! Seeded random points, triples and isometries for property checks.

use std::f64::consts::PI;

use rand::Rng;

use crate::algebra::{Octonion, Quaternion};
use crate::error::GeomError;
use crate::hermitian::{BallPoint, Triple};
use crate::isometry::Isometry;
use crate::linalg::QMatrix;

/// Scalar field of the coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
    Quaternion,
}

impl Field {
    /// Restricts a quaternion to the field.
    pub fn restrict(self, q: Quaternion) -> Quaternion {
        match self {
            Field::Real => Quaternion::real(q.w),
            Field::Complex => Quaternion::complex(q.w, q.x),
            Field::Quaternion => q,
        }
    }
}

fn gauss(rng: &mut impl Rng) -> f64 {
    // Box–Muller; the first uniform is kept away from 0
    let u: f64 = 1.0 - rng.gen::<f64>();
    let v: f64 = rng.gen();
    (-2.0 * u.ln()).sqrt() * (2.0 * PI * v).cos()
}

pub fn random_quaternion(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(gauss(rng), gauss(rng), gauss(rng), gauss(rng))
}

pub fn random_unit_quaternion(rng: &mut impl Rng) -> Quaternion {
    loop {
        let q = random_quaternion(rng);
        if q.norm() > 1e-3 {
            return q.normalize();
        }
    }
}

pub fn random_octonion(rng: &mut impl Rng) -> Octonion {
    Octonion::new(random_quaternion(rng), random_quaternion(rng))
}

/// Uniformly distributed direction on the unit sphere of `F^n`.
fn random_direction(rng: &mut impl Rng, n: usize, field: Field) -> Vec<Quaternion> {
    loop {
        let v: Vec<Quaternion> = (0..n).map(|_| field.restrict(random_quaternion(rng))).collect();
        let r = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if r > 1e-3 {
            return v.into_iter().map(|c| c.scale(1.0 / r)).collect();
        }
    }
}

pub fn random_boundary_point(rng: &mut impl Rng, n: usize, field: Field) -> BallPoint {
    BallPoint::boundary(random_direction(rng, n, field)).expect("unit vector")
}

/// Interior point with Euclidean norm uniform in `[0, max_norm)`.
pub fn random_interior_point(rng: &mut impl Rng, n: usize, field: Field, max_norm: f64) -> BallPoint {
    let r = rng.gen::<f64>() * max_norm;
    let d = random_direction(rng, n, field);
    BallPoint::interior(d.into_iter().map(|c| c.scale(r)).collect()).expect("point inside the ball")
}

/// Three boundary points, pairwise at Euclidean distance at least `0.05`.
pub fn random_boundary_triple(rng: &mut impl Rng, n: usize, field: Field) -> Triple {
    loop {
        let p = [0, 1, 2].map(|_| random_boundary_point(rng, n, field));
        if p[0].euclid_dist(&p[1]) > 0.05 && p[1].euclid_dist(&p[2]) > 0.05 && p[2].euclid_dist(&p[0]) > 0.05 {
            let [a, b, c] = p;
            return Triple::new(a, b, c).expect("distinct points");
        }
    }
}

/// Random element of `Sp(n) x Sp(1)`: unit diagonal scalars mixed by real
/// rotations in every coordinate plane of the positive part.
pub fn random_compact(rng: &mut impl Rng, n: usize, field: Field) -> Isometry {
    let unit = |rng: &mut _| field_unit(rng, field);
    let diag: Vec<Quaternion> = (0..=n).map(|_| unit(rng)).collect();
    let mut g = Isometry::diagonal(&diag).expect("unit diagonal");
    for i in 0..n {
        for j in i + 1..n {
            let rot = Isometry::rotation(n, i, j, rng.gen_range(-PI..PI));
            let d: Vec<Quaternion> = (0..=n).map(|_| unit(rng)).collect();
            g = g.compose(&rot).compose(&Isometry::diagonal(&d).expect("unit diagonal"));
        }
    }
    g
}

fn field_unit(rng: &mut impl Rng, field: Field) -> Quaternion {
    match field {
        Field::Real => Quaternion::real(if rng.gen_bool(0.5) { 1.0 } else { -1.0 }),
        _ => loop {
            let q = field.restrict(random_quaternion(rng));
            if q.norm() > 1e-3 {
                break q.normalize();
            }
        },
    }
}

/// Random isometry `K_1 A_r K_2` with rapidity `|r| <= max_rapidity`.
pub fn random_isometry(rng: &mut impl Rng, n: usize, field: Field, max_rapidity: f64) -> Isometry {
    let k1 = random_compact(rng, n, field);
    let k2 = random_compact(rng, n, field);
    let a = Isometry::axis_translation(n, rng.gen_range(-max_rapidity..max_rapidity));
    k1.compose(&a).compose(&k2)
}

/// Random matrix of `Sp(n-1)` used as the upper-left block of block isometries.
pub fn random_unitary_block(rng: &mut impl Rng, n: usize, field: Field) -> Result<QMatrix, GeomError> {
    let g = random_compact(rng, n - 1, field);
    let m = g.matrix();
    let k = n - 1;
    let mut out = QMatrix::zeros(k, k);
    // the last diagonal entry of the compact element belongs to the negative
    // coordinate and is dropped
    for i in 0..k {
        for j in 0..k {
            out[(i, j)] = m[(i, j)];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = random_isometry(&mut rng, 3, Field::Quaternion, 1.0);
            assert!(g.form_residual() < 1e-12);
            let p = random_boundary_point(&mut rng, 3, Field::Complex);
            assert!(p.is_boundary() && p.coords().iter().all(|c| c.y == 0.0 && c.z == 0.0));
            assert!(random_interior_point(&mut rng, 2, Field::Real, 0.9).norm() < 0.9);
        }
    }

    #[test]
    fn seeding_is_deterministic() {
        let a = random_boundary_triple(&mut ChaCha8Rng::seed_from_u64(9), 2, Field::Quaternion);
        let b = random_boundary_triple(&mut ChaCha8Rng::seed_from_u64(9), 2, Field::Quaternion);
        assert_eq!(a, b);
    }
}
