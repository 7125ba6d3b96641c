use thiserror::Error;

/// Errors raised by the bound computations and the built-in catalog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator #{index} is invalid: degree={degree}, height={height} (both must be >= 1)")]
    InvalidGenerator {
        index: usize,
        degree: usize,
        height: usize,
    },
    #[error("presentation has no generators")]
    EmptyPresentation,
    #[error("invalid rational type: {0}")]
    InvalidRationalType(String),
    #[error("invalid Betti vector: {0}")]
    InvalidBetti(String),
    #[error("d - l must be even (d={d}, l={l})")]
    ParityError { d: usize, l: usize },
    #[error("rank/dimension out of range (d={d}, l={l}); need d >= l >= 1")]
    RankError { d: usize, l: usize },
    #[error("{what}: parameter n={n} is out of range")]
    DomainError { what: &'static str, n: usize },
    #[error("Betti vector has length {found}, expected d+1 = {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("face index {i} is outside 0..={d}")]
    IndexError { i: usize, d: usize },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("group `{group}` has no presentation over `{field}`")]
    UnknownField { group: String, field: String },
    #[error("group `{0}` is parametric and needs a value for n")]
    MissingParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
