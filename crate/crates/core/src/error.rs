use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("a group needs at least one generator")]
    NoGenerators,

    #[error("group too large for {what}: order {order} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        order: u128,
        cap: usize,
    },

    #[error("group order overflows 128 bits")]
    OrderOverflow,

    #[error("subgroups belong to different ambient groups")]
    AmbientMismatch,

    #[error("element set is not a subgroup of the given group")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} does not divide the group order")]
    PrimeNotInOrder(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown group reference `{0}`")]
    UnknownGroup(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
