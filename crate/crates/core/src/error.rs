use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum GraphonError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph already sparsified with rho = {0}")]
    DoubleSparsification(f64),

    #[error("no oracle for this graphon: {0}")]
    UnsupportedOracle(String),

    #[error("exact search limited to n <= {threshold}, got n = {n}")]
    TooLargeForExact { n: usize, threshold: usize },

    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),

    #[error("radius {0} is not in (0, 1); dimension formula undefined")]
    RadiusOutOfRange(f64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GraphonError>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(GraphonError::InvalidArgument(msg.into()))
}
