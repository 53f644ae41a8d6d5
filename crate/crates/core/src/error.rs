use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial where a non-zero one is required")]
    ZeroPolynomial,
    #[error("zero input where a non-zero value is required")]
    ZeroInput,
    #[error("rational function has a pole at {0}")]
    PoleAtPoint(String),
    #[error("classification is not of Kummer type")]
    NotKummer,
    #[error("the object point c = 0 lies outside the object set")]
    ZeroObjectPoint,
    #[error("lifted relations do not share the same shape")]
    ShapeMismatch,
    #[error("relation is not monic in y; ideal membership is undecided")]
    NotMonic,
    #[error("interval {lo}..{hi} does not isolate exactly one real root")]
    InvalidIsolation { lo: String, hi: String },
    #[error("empty interval: lower bound is not below upper bound")]
    EmptyInterval,
    #[error("refinement budget of {0} bisections exhausted")]
    RefinementBudget(usize),
    #[error("degree {degree} exceeds the supported bound {bound}")]
    DegreeLimit { degree: usize, bound: usize },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unsupported equation order {0}; only first-order equations are handled")]
    UnsupportedOrder(usize),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
