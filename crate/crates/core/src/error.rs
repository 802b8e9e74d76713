use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: numerator has degree {num}, denominator has degree {den}")]
    DegreeMismatch { num: usize, den: usize },
    #[error("polynomial is not monic in u")]
    NotMonic,
    #[error("series constant term must be {expected}, got {found}")]
    ConstantTerm {
        expected: &'static str,
        found: String,
    },
    #[error("rescale factor must be nonzero")]
    ZeroScale,
    #[error("symbolic roots unavailable: {0}")]
    SymbolicRootsUnavailable(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("word {0:?} is not a reduced expression of the longest element")]
    WordNotReduced(Vec<usize>),
    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),
    #[error("node {node} out of range 1..={rank}")]
    UnknownNode { node: usize, rank: usize },
    #[error("series order {order} too small: need at least {needed}")]
    OrderTooSmall { order: usize, needed: usize },
    #[error("slope mismatch at node {node}: root {root} does not have slope 1/{d}")]
    SlopeMismatch { node: usize, root: String, d: i64 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
