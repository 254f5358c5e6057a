use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid word {0:?}: letters must be 0, 1 or 2")]
    InvalidWord(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("leaf index {index} out of range 1..={leaves}")]
    IndexOutOfRange { index: usize, leaves: usize },

    #[error("tree is not a path tree")]
    NotAPathTree,

    #[error("both trees must be path trees")]
    NotPathTrees,

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("word of length {len} is too short (need at least {min})")]
    TooShort { len: usize, min: usize },

    #[error("zero vector has no quaternion or letter image")]
    ZeroInput,

    #[error("a single-leaf tree has no sibling to duplicate against")]
    RootLeaf,

    #[error("unknown claim {0:?}; see `verify --list`")]
    UnknownClaim(String),

    #[error("estimated {estimate} word checks exceeds the budget of {budget}; pass --budget to override")]
    RangeTooLarge { estimate: u128, budget: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn bad(message: impl Into<String>) -> Self {
        Error::BadParams(message.into())
    }
}
