//! Ready-made groups: Schottky-type Fuchsian groups split along the standard
//! axis, and a real group in `O(8,1)` for bending `H^4_R` inside `H^8_R`.

use crate::error::GeomError;
use crate::isometry::Isometry;

use super::{embed_fuchsian, mobius_to_o21, DecompositionKind, Generator, GroupData, RealBendData};

/// Möbius map `x -> c2 - r1 r2 / (x - c1)` sending the outside of the
/// interval `[c1 - r1, c1 + r1]` into `[c2 - r2, c2 + r2]`, as an isometry.
pub fn schottky_pairing(c1: f64, r1: f64, c2: f64, r2: f64) -> Result<Isometry, GeomError> {
    if !(r1 > 0.0 && r2 > 0.0) {
        return Err(GeomError::Domain("Schottky radii must be positive"));
    }
    let k = 1.0 / (r1 * r2).sqrt();
    embed_fuchsian(&mobius_to_o21(c2 * k, (-r1 * r2 - c1 * c2) * k, k, -c1 * k)?)
}

/// Translation along the standard axis with translation length `eps`,
/// written as the Möbius dilation `x -> e^{eps/2} x`.
pub fn axis_generator(eps: f64) -> Result<Isometry, GeomError> {
    embed_fuchsian(&mobius_to_o21((eps / 4.0).exp(), 0.0, 0.0, (-eps / 4.0).exp())?)
}

/// Real boundary intervals `(center, radius)` of the two Schottky discs
/// used on each side of the axis; negate the centers for the positive side.
pub const SCHOTTKY_DISCS: [(f64, f64); 2] = [(-1.075, 0.025), (-1.225, 0.025)];

/// Distance, in the metric of this crate, from the standard axis to the
/// geodesic over the interval `[p, q]`, `0 < p < q`.
pub fn axis_separation(p: f64, q: f64) -> f64 {
    // real planes carry half the curvature of F-lines, so lengths double
    2.0 * ((q + p) / (q - p)).acosh()
}

/// Smallest separation between the axis and the Schottky discs.
pub fn schottky_separation() -> f64 {
    SCHOTTKY_DISCS
        .iter()
        .map(|&(c, r)| axis_separation(c.abs() - r, c.abs() + r))
        .fold(f64::INFINITY, f64::min)
}

fn sided_pairing(sign: f64) -> Result<Isometry, GeomError> {
    let [(c1, r1), (c2, r2)] = SCHOTTKY_DISCS;
    schottky_pairing(sign * c1, r1, sign * c2, r2)
}

/// Amalgam `<gamma_alpha, a> *_{<gamma_alpha>} <gamma_alpha, b>` with
/// `Gamma_1` on the negative side of the axis and `Gamma_2` on the positive one.
pub fn fuchsian_amalgam(eps: f64) -> Result<GroupData, GeomError> {
    GroupData::new(
        DecompositionKind::Amalgam,
        Generator::new("alpha", axis_generator(eps)?),
        vec![Generator::new("a", sided_pairing(1.0)?)],
        vec![Generator::new("b", sided_pairing(-1.0)?)],
    )
}

/// HNN extension `<gamma_alpha, a, gamma_2>` with the extra generator
/// pairing discs on the positive side.
pub fn fuchsian_hnn(eps: f64) -> Result<GroupData, GeomError> {
    GroupData::new(
        DecompositionKind::Hnn,
        Generator::new("alpha", axis_generator(eps)?),
        vec![Generator::new("a", sided_pairing(1.0)?)],
        vec![Generator::new("t", sided_pairing(-1.0)?)],
    )
}

/// Generators preserving `H^4_R` in `O(8,1)`: `gamma_P` translates along
/// the first axis inside `P`, while the generators of `Gamma_1` and `Gamma_2`
/// translate along geodesics pushed to the two sides of `P`.
pub fn real_bend_example() -> Result<RealBendData, GeomError> {
    let gamma_p = Isometry::boost(8, 0, 0.25);
    let along = Isometry::boost(8, 1, 0.8);
    let push = |s: f64| Isometry::boost(8, 3, s);
    let a = push(-1.0).conjugate(&along);
    let b = push(1.0).conjugate(&along);
    RealBendData::new(gamma_p, vec![a], vec![b])
}
