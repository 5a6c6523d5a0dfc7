//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter fell outside its admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation was requested in a regime the underlying results do not cover
    /// (e.g. gradient representation for alpha <= 1).
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    /// Quadrature/series failed its own convergence diagnostics.
    #[error("numeric convergence failure: {0}")]
    Convergence(String),

    /// A precondition between two inputs does not hold (lattice mismatch, threshold mismatch, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Invalid run configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
