use thiserror::Error;

/// Errors raised by the group, graph, spectral and bound routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("group too large: more than {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("empty generating set")]
    NoGenerators,

    #[error("not a subgroup: {0}")]
    NotASubgroup(&'static str),

    #[error("element {0} does not belong to the group")]
    ElementNotInGroup(String),

    #[error("multiset is not symmetric: {0} and its inverse have different multiplicities")]
    NotSymmetric(String),

    #[error("empty multiset")]
    EmptyMultiset,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("subgroup enumeration exceeded the limit of {limit} subgroups")]
    SubgroupLimit { limit: usize },

    #[error("search space too large: {size} candidates exceed the cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },

    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),

    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| = {diff:e}")]
    AsymmetricMatrix { row: usize, col: usize, diff: f64 },

    #[error("matrix dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("eigenvalue iteration did not converge")]
    NoConvergence,

    #[error("zero vector")]
    ZeroVector,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown catalog group `{0}`")]
    UnknownCatalog(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
