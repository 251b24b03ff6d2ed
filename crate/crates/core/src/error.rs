use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration needs about {needed} steps, over the budget of {limit}; raise the budget to override")]
    BudgetExceeded { needed: u128, limit: u128 },

    #[error("strand {index} is not a subsequence of the master lineup")]
    NotASubsequence { index: usize },

    #[error("letter index {letter} is outside the alphabet of size {q}")]
    LetterOutOfRange { letter: u32, q: u32 },

    #[error("selection matrix has {rows} rows but the lineup has {len} letters")]
    RowCountMismatch { rows: usize, len: usize },

    #[error("the row-majority criterion needs an odd strand count, got {n}")]
    EvenStrandCount { n: u32 },

    #[error("alphabet symbols must be distinct: `{token}` repeats")]
    DuplicateSymbol { token: String },

    #[error("alphabet symbols must be nonempty and free of commas: `{token}`")]
    InvalidSymbol { token: String },

    #[error("alphabet needs at least one symbol")]
    EmptyAlphabet,

    #[error("`{token}` is not a symbol of the alphabet {alphabet}")]
    UnknownSymbol { token: String, alphabet: String },

    #[error("a cyclic lineup needs a nonempty base")]
    EmptyCyclicBase,
}

pub type Result<T> = std::result::Result<T, Error>;
