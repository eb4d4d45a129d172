use thiserror::Error;

/// Error type shared by the solver, oracle and CLI layers.
#[derive(Debug, Error)]
pub enum QesError {
    /// Input outside the mathematical domain of an operation (r <= 0, |E| >= mu, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition was not met (e.g. constrained coefficients missing).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An iterative solve did not converge; carries the best residual reached.
    #[error("solver failure: {message} (best residual {best_residual:.3e})")]
    SolverFailure { message: String, best_residual: f64 },

    /// The independent coefficient-matching route failed (signals a non-QES
    /// parameter set or a branch without the requested root structure).
    #[error("oracle failure: {0}")]
    OracleFailure(String),

    /// A structural invariant was violated (non-finite normalization, ...).
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, QesError>;

impl QesError {
    /// CLI process exit code: 1 solver/domain failure, 2 usage, 3 verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            QesError::Usage(_) => 2,
            _ => 1,
        }
    }
}
