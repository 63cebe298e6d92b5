use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input; `position` is a byte offset into `input`.
    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("shape has {shape} nodes but the type has size {kind}")]
    SizeMismatch { shape: usize, kind: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid Garnir data: {0}")]
    InvalidGarnir(String),

    /// The representative fails the row condition, so the sign map is not defined.
    #[error("representative {0} is not in R")]
    NotInR(String),

    #[error("{omega} is not in the row double coset of {rep}")]
    NotInDoubleCoset { omega: String, rep: String },

    #[error("{what} = {value} exceeds the bound {bound}")]
    SizeBound {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(input: &str, position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        position,
        message: message.into(),
    }
}
