use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported alphabet size {0}; supported sizes are 2, 3, 4, 5")]
    UnsupportedAlphabet(u32),
    #[error("invalid field definition: {0}")]
    InvalidField(String),
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("circulant first row is not palindromic")]
    NotPalindromic,
    #[error("alphabets differ: {0} vs {1}")]
    AlphabetMismatch(u8, u8),
    #[error("rows are not symplectically orthogonal (rows {0} and {1})")]
    NotSelfOrthogonal(usize, usize),
    #[error("rows are linearly dependent (rank {rank} < {n})")]
    RankDeficient { rank: usize, n: usize },
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded { what: &'static str, needed: u128, limit: u128 },
    #[error("graph too large for packed orbit keys ({0})")]
    KeyTooWide(String),
    #[error("database is incomplete or inconsistent: {0}")]
    IncompleteDatabase(String),
    #[error("non-exact division at index {0}; the input counts are inconsistent")]
    InexactDivision(usize),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }
}
