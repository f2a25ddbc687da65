use thiserror::Error;

pub type Result<T, E = ChainError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("chain must have at least one point")]
    EmptyChain,
    #[error("table has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("table decreases at position {index}: {before} > {after}")]
    NotMonotone {
        index: usize,
        before: usize,
        after: usize,
    },
    #[error("value {value} is outside the chain [0, {}]", .n.saturating_sub(1))]
    OutOfRange { value: usize, n: usize },
    #[error("multiplicities sum to {got}, expected {expected}")]
    BadMultiplicitySum { expected: usize, got: usize },
    #[error("{got} multiplicities given for {expected} vertices")]
    MultiplicityCount { expected: usize, got: usize },
    #[error("value {0} is not a vertex of the vertex set")]
    ImageNotInVertexSet(usize),
    #[error("chain sizes differ: {left} vs {right}")]
    ChainMismatch { left: usize, right: usize },
    #[error("run-length forms are written over different vertex sets")]
    VertexSetMismatch,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("vertex set is not strictly increasing at position {index}")]
    VerticesNotIncreasing { index: usize },
    #[error("endomorphism is not in the simplex: value {value} is not a vertex")]
    NotInSimplex { value: usize },
    #[error("projection indices must satisfy 0 <= l < m <= {max}, got l = {lower}, m = {upper}")]
    InvalidProjection {
        lower: usize,
        upper: usize,
        max: usize,
    },
    #[error("inner projection does not act on the image simplex of the outer projection")]
    IncompatibleSpecs,
    #[error("invalid subset selector: {0}")]
    InvalidSelector(String),
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("unknown claim `{name}`; known claims: all, {known}")]
    UnknownClaim { name: String, known: String },
    #[error("estimated {estimated} checks exceeds the ceiling of {ceiling}")]
    BoundsTooLarge { estimated: u128, ceiling: u128 },
}
