use thiserror::Error;

/// Errors raised by the algebraic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(String),

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("unknown ring literal `{0}`")]
    UnknownRing(String),

    #[error("variable mismatch: {0}")]
    VariableMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("sub-lattice is not contained in the super-lattice (column {0})")]
    NotContained(usize),

    #[error("presentation matrix is singular or not square")]
    SingularPresentation,

    #[error("invalid root system {0}{1}")]
    InvalidRootSystem(char, usize),

    #[error("zero vector is not a root")]
    ZeroRoot,

    #[error("invalid lattice parameters: {0}")]
    InvalidParams(String),

    #[error("bracket leaves the lattice: {0}")]
    ClosureViolation(String),

    #[error("matrix is not alternating: {0}")]
    NotAlternating(String),

    #[error("computation guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("unsupported lattice for this operation: {0}")]
    Unsupported(String),

    #[error("index is infinite")]
    InfiniteIndex,
}

pub type Result<T> = std::result::Result<T, Error>;
