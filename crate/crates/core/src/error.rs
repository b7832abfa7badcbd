use thiserror::Error;

/// Everything that can go wrong while building spinors, operators or reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no intertwiner: the null space of X -> XA - BX is trivial")]
    NoIntertwiner,

    #[error("ambiguous intertwiner: null space has dimension {0}")]
    AmbiguousIntertwiner(usize),

    #[error("momentum direction undefined at |p| = 0")]
    DirectionUndefined,

    #[error("coordinate singularity: momentum along -z (|p| + pz = {0:e})")]
    CoordinateSingularity(f64),

    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
