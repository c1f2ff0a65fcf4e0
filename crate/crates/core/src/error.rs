use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: char, rank: usize },

    #[error("cannot parse simple type `{0}`")]
    ParseType(String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not in the root lattice")]
    NotInRootLattice(String),

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("Weyl group of {ty} has order {order}, above the cap {cap}")]
    WeylCapExceeded { ty: String, order: u64, cap: u64 },

    #[error("rank {rank} of {ty} exceeds the chamber rank cap {cap}")]
    RankCapExceeded { ty: String, rank: usize, cap: usize },

    #[error("epsilon coordinates are not available for {0}")]
    NoEpsilonModel(String),

    #[error("vector {0} is not in the span of the simple roots")]
    NotInSpan(String),

    #[error("invalid GL weight {0:?}: parts must be weakly decreasing")]
    InvalidGlWeight(Vec<i64>),

    #[error("invalid SO weight {0:?}")]
    InvalidSoWeight(Vec<i64>),

    #[error("GL weight {0:?} has nonzero total")]
    NonzeroTotal(Vec<i64>),

    #[error("expected {expected} parts, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("non-integral value {0} produced by a closed form")]
    NonIntegral(String),

    #[error("lattice basis is rank deficient")]
    RankDeficient,

    #[error("index {index} exceeds the coset enumeration cap {cap}")]
    CosetCapExceeded { index: u64, cap: u64 },

    #[error("sampling failed: {0}")]
    Sampling(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid rational `{0}`")]
    ParseRational(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
