use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 2, got {0}")]
    InvalidAlphabet(u32),

    #[error("run bound k must be at least 2, got {0}")]
    InvalidRunBound(usize),

    #[error("symbol {symbol} is outside the alphabet {{0..{}}}", .q - 1)]
    SymbolOutOfRange { symbol: u32, q: u32 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("alphabet mismatch: q={left} vs q={right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("string is not binary: {0}")]
    NotBinary(String),

    #[error("construction requires {expected} q, got q={q}")]
    WrongParity { q: u32, expected: &'static str },

    #[error("list of {requested} strings exceeds the generation budget of {budget}")]
    BudgetExceeded { requested: String, budget: u64 },
}
