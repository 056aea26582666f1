use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("the zero matrix has no one-dimensional span")]
    ZeroMatrix,
    #[error("{generators} Grassmann generators exceed the configured budget of {budget}")]
    Budget { generators: usize, budget: usize },
    #[error("subspace is not an ideal: [{basis}, {vector}] leaves the subspace")]
    NotAnIdeal { basis: String, vector: String },
    #[error("element is not nilpotent: {0}")]
    NotNilpotent(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
