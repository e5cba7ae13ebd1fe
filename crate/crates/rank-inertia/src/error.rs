use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian")]
    NotHermitian,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("premise violated: {0}")]
    PremiseViolated(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// Two routes that must agree (a formula and its cross-check) disagreed.
    /// This always indicates a transcription or assembly bug, never bad input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("search budget unsatisfiable: {0}")]
    BudgetUnsatisfiable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
