use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation is reducible: {0}")]
    Reducible(String),
    #[error("permutation is not standard: {0}")]
    NotStandard(String),
    #[error("permutation is not self-inverse: {0}")]
    NotSelfInverse(String),
    #[error("generalized permutation is not proper: {0}")]
    Improper(String),
    #[error("class size exceeds cap {cap}")]
    CapExceeded { cap: usize },
    #[error("no construction rule covers key {0}")]
    UnsupportedKey(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("unknown letter {0}")]
    UnknownLetter(String),
    #[error("invalid block parameters: {0}")]
    InvalidBlock(String),
    #[error("invalid insertion site {site}: {msg}")]
    InvalidSite { site: usize, msg: String },
    #[error("no insertion site found for {0}")]
    NoSite(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point {0} is outside the domain")]
    OutOfRange(String),
    #[error("point {0} is a singular point of the map")]
    SingularPoint(String),
    #[error("induction undefined: last subintervals have equal length")]
    InductionUndefined,
    #[error("suspension data violates the cone condition at prefix {index} of row {row}")]
    ConeViolation { row: u8, index: usize },
    #[error("lengths violate the row-sum equality: top {top} != bottom {bottom}")]
    RowSumMismatch { top: String, bottom: String },
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("construction produced an unexpected result: {0}")]
    ConstructionFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
