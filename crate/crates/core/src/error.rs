use thiserror::Error;

/// Errors raised by the algebra, polynomial and classification layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// A nonzero element with vanishing norm: the chosen algebra is split.
    #[error("zero divisor {0}: the algebra is not a division algebra")]
    ZeroDivisor(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("invalid algebra parameters: {0}")]
    InvalidAlgebra(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("numeric failure: {message}")]
    NumericFailure {
        message: String,
        /// Root estimates reached before the failure.
        partial: Vec<(f64, f64)>,
    },

    /// A self-check on a computed result failed.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
