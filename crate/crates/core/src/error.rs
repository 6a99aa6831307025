use thiserror::Error;

/// Errors raised by the fuzzy-value algebra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("empty collection")]
    EmptyCollection,

    #[error("inconsistent lattice scan: {0}")]
    InconsistentScan(String),

    #[error("rung mismatch: {left} vs {right}")]
    RungMismatch { left: f64, right: f64 },

    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),

    #[error("empty pattern set")]
    EmptyPatternSet,

    #[error("empty sample set")]
    EmptySamples,

    #[error("map is not total: no image for {0:?}")]
    NonTotalMap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
