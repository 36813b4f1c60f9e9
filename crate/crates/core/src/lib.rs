//! Computational quaternionic and octonionic hyperbolic geometry.
//!
//! Points of `H^n_F` (`F` the complex numbers or the quaternions) live in the
//! unit ball of `F^n` and are lifted to the indefinite Hermitian space
//! `F^{n,1}`. Scalars multiply vectors on the left, matrices act on row
//! vectors from the right, and a lift `x` projectivizes to `x_{n+1}^{-1} x_i`.
//!
//! Distances are normalized so that every `F`-line carries the curvature `-1`
//! Poincaré metric: `cosh^2(d/2) = <z,w><w,z> / (<z,z><w,w>)`.

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod groups;
pub mod hermitian;
pub mod invariants;
pub mod isometry;
pub mod linalg;
pub mod models;
pub mod sampling;
pub mod tol;
pub mod verify;

pub use algebra::{
    associator, line_angle, o_conj, o_mul, q_mul, unit_rotation, ImaginaryDirection, Octonion,
    Quaternion,
};
pub use error::GeomError;
pub use geometry::{
    bisector_contains, dirichlet_membership, dist_to_spine, distance_to_geodesic, geodesic_point,
    halfspace_side, move_to_standard, project_to_fline, pythagoras_check, spine_point, Bisector,
    DirichletVerdict, FLine, Geodesic, Side,
};
pub use groups::{
    bend, bend_amalgam, bend_hnn, collar_check, embed_fuchsian, fixed_points, limit_set_sample,
    marker_invariant, real_bend_octonion_line, rotation_u, translation_length, DecompositionKind,
    FixedPoints, Generator, GroupData, LimitSample, RealBendData,
};
pub use hermitian::{distance, form, lift, triple_product, BallPoint, HVector, PointKind, Triple};
pub use invariants::{
    cartan_angular, character_eval, octonion_angular, toledo, triangle_area_gb, triple_isometry,
    AngularValue, CharacterReport, ClosureMode, TriangulatedCycle,
};
pub use isometry::Isometry;
pub use linalg::QMatrix;
pub use models::{
    ball_to_boundary, boundary_to_ball, carnot_inv, carnot_mul, cygan_dist, cygan_norm,
    BoundaryCoord, CarnotElement, CarnotPoint,
};

pub type Result<T> = std::result::Result<T, GeomError>;
