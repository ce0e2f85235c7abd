use crate::factorization::FactorizationKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("words must be nonempty")]
    EmptyWord,

    #[error("alphabets must contain at least one symbol")]
    EmptyAlphabet,

    #[error("alphabet lists symbol {symbol:#04x} twice")]
    DuplicateSymbol { symbol: u8 },

    #[error("symbol {symbol:#04x} has no rank in the alphabet")]
    UnrankedSymbol { symbol: u8 },

    #[error("invalid {kind} factorization: {reason}")]
    InvalidFactorization {
        kind: FactorizationKind,
        reason: String,
    },

    #[error("factorizations cover different words")]
    WordMismatch,

    #[error("word of length {len} exceeds the enumeration limit {limit}")]
    LimitExceeded { len: usize, limit: usize },

    /// A structural fact the algorithms rely on failed to hold. Reaching
    /// this is a bug in the crate, never a property of the input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
