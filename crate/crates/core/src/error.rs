use thiserror::Error;

/// Errors reported by assembly, evaluation and solver routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size mismatch in {context}: expected {expected}, got {actual}")]
    SizeMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("unsupported basis: {0}")]
    UnsupportedBasis(String),

    #[error("point or edge not on the boundary: {0}")]
    NotOnBoundary(String),

    #[error("linear solver failure: {0}")]
    Solver(String),

    #[error("unsupported system structure: {0}")]
    UnsupportedStructure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
