use thiserror::Error;

/// Errors raised by the library. Every operation is total except where noted.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ordinal {k} out of range for block {block} of size {size}")]
    Range { block: usize, k: usize, size: usize },

    #[error("no convergence within {max_iter} iterations on a {rows}x{cols} matrix")]
    NumericFailure {
        rows: usize,
        cols: usize,
        max_iter: usize,
    },

    #[error("matrix is not Hermitian at ({row}, {col})")]
    NotHermitian { row: usize, col: usize },

    #[error("entry ({row}, {col}) is supplied by more than one block")]
    Overlap { row: usize, col: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A generator's declared certificate disagrees with its own entries.
    #[error("certificate violated: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
