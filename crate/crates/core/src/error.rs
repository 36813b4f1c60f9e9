use thiserror::Error;

/// Errors raised by geometric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point lies outside the closed unit ball (norm {0})")]
    OutsideBall(f64),
    #[error("expected an interior point")]
    NotInterior,
    #[error("expected a boundary point")]
    NotBoundary,
    #[error("boundary points are at infinite distance")]
    InfiniteDistance,
    #[error("coincident points")]
    Coincident,
    #[error("degenerate triple: {0}")]
    DegenerateTriple(&'static str),
    #[error("projected lift is not negative")]
    OutsideCone,
    #[error("point does not lie on the line")]
    NotOnLine,
    #[error("singular system: {0}")]
    Singular(&'static str),
    #[error("matrix does not preserve the Hermitian form (residual {0:e})")]
    NotIsometry(f64),
    #[error("isometry is not loxodromic: {0}")]
    NotLoxodromic(&'static str),
    #[error("wrong decomposition kind: expected {0}")]
    WrongKind(&'static str),
    #[error("axis generator does not fix the standard axis endpoints")]
    NonStandardAxis,
    #[error("generators do not preserve the real 4-space")]
    NotPreservingSubspace,
    #[error("chain is not closed: {0}")]
    NotClosed(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
}
