use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("presentation has an infinite cokernel (free rank {free_rank})")]
    InfiniteQuotient { free_rank: usize },
    #[error("invalid invariant factors: {0}")]
    InvalidGroup(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,
    #[error("{what} of size {size} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: u128,
        bound: u128,
    },
    #[error("invalid modulus {0}: expected 0 or n >= 2")]
    InvalidModulus(i64),
    #[error("modules are defined over different rings")]
    RingMismatch,
    #[error("results were computed for different carriers")]
    CarrierMismatch,
    #[error("operation requires a scalar base ring")]
    NonScalarRing,
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),
    #[error("invalid module action: {0}")]
    InvalidAction(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("equivalence violated: {0}")]
    EquivalenceViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
