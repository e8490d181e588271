use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("not a sublattice: generator {index} is not in the span of the ambient basis")]
    NotSublattice { index: usize },

    #[error("matrix {index} is not unimodular (det = {det})")]
    NotUnimodular { index: usize, det: BigInt },

    #[error("matrix {index} does not preserve the bilinear form")]
    FormNotPreserved { index: usize },

    #[error("group too large or infinite: closure exceeds bound {bound}")]
    GroupTooLarge { bound: usize },

    #[error("group is not cyclic")]
    NotCyclic,

    #[error(
        "cocycle system too large: order {order}, rank {rank} (caps: order <= {max_order}, rank <= {max_rank})"
    )]
    CocycleCap {
        order: usize,
        rank: usize,
        max_order: usize,
        max_rank: usize,
    },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("inconsistent permutations: {0}")]
    InvalidPermutation(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("degree {0} out of range (expected 1..=6)")]
    DegreeOutOfRange(i64),

    #[error("genus must be at least 1, got {0}")]
    InvalidGenus(i64),

    #[error("vector is not a root (need a.a = -2 and a.K = 0)")]
    NotARoot,

    #[error("invalid search parameters: {0}")]
    InvalidSearch(String),

    #[error("search exhausted after {trials} trials")]
    SearchExhausted { trials: u64 },

    #[error("fixed sublattice has rank {0}, expected 1")]
    FixedRank(usize),

    #[error("{0}")]
    NotDivisible(String),

    #[error("invalid input at `{path}`: {message}")]
    Input { path: String, message: String },

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn input(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input {
            path: path.into(),
            message: message.into(),
        }
    }
}
