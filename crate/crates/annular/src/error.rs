use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: left acts on {left} points, right on {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("invalid cycle data: {0}")]
    InvalidCycles(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{what} requires {param} <= {limit}, got {requested}; raise the guard explicitly if you really want this")]
    GuardExceeded {
        what: &'static str,
        param: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("block sizes must be positive, got p={p}, q={q}")]
    EmptyBlock { p: usize, q: usize },

    #[error("element is not in the poset: {0}")]
    NotInPoset(String),

    #[error("not a valid factorization: {0}")]
    NotAFactorization(String),

    #[error("zero transpositions have no sign toggle")]
    ToggleOfZero,

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid rank profile: {0}")]
    InvalidProfile(String),

    #[error("cycle cannot be split into an outer run followed by an inner run: {0}")]
    NotAnnular(String),

    #[error("{0}")]
    Domain(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
