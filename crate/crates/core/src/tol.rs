//! Numerical thresholds shared across modules.

/// A ball point whose norm lies within this distance of `1` is a boundary point.
pub const BOUNDARY: f64 = 1e-9;

/// Pairwise form values of standard lifts below this modulus make a triple degenerate.
pub const DEGENERATE_FORM: f64 = 1e-12;

/// Pivot threshold for indefinite Gram–Schmidt.
pub const PIVOT: f64 = 1e-10;

/// Lines whose Gram determinant is below this modulus are rejected.
pub const GRAM_DET: f64 = 1e-12;

/// Accepted residual of `M J M^* - J` for a matrix to count as an isometry.
pub const ISOMETRY: f64 = 1e-9;

/// Spectral radius above `1 + LOXODROMY` classifies an isometry as loxodromic.
pub const LOXODROMY: f64 = 1e-8;

/// Two points closer than this (Euclidean, ball coordinates) are coincident.
pub const COINCIDENT: f64 = 1e-12;
