use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("matrix is not skew-symmetric at ({i},{j}): b_ij = {bij}, b_ji = {bji}")]
    NotSkewSymmetric { i: usize, j: usize, bij: i64, bji: i64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },

    #[error("resource limit exceeded: more than {budget} nodes")]
    Budget { budget: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("ordering construction failed: {0}")]
    Construction(String),

    #[error("invalid ordering: {0}")]
    Ordering(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, column, msg: msg.into() }
    }
}
