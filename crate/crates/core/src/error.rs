//! Error taxonomy shared by every subsystem.
//!
//! Each variant maps onto one CLI exit code (see [`Error::exit_code`]):
//! usage problems are reported by the argument parser itself (exit 2),
//! semantic configuration problems are `Validation` (3), linear-algebra or
//! floating-point breakdowns are `Numerical` (4), and filesystem/serialization
//! problems are `Io` (5).

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller broke an interface contract (bad index, mismatched
    /// dimensions, out-of-order feedback, gap in the state buffer, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A configuration value is semantically invalid.
    #[error("invalid configuration: {0}")]
    Validation(String),

    /// A numerical operation failed (non-PSD covariance, singular system,
    /// NaN/Inf escaping a computation).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Filesystem or serialization failure.
    #[error("i/o failure: {0}")]
    Io(String),
}

impl Error {
    /// Exit code used by the command-line front end for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Contract(_) | Error::Validation(_) => 3,
            Error::Numerical(_) => 4,
            Error::Io(_) => 5,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Returns `Err(Error::Numerical)` when `x` is NaN or infinite.
///
/// Used at operation boundaries so that numerical breakdowns surface as
/// errors instead of propagating silently through the pipeline.
pub fn ensure_finite(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Numerical(format!("{what} is not finite ({x})")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_exit_codes_match_documented_mapping() {
        assert_eq!(Error::Validation("x".into()).exit_code(), 3);
        assert_eq!(Error::Contract("x".into()).exit_code(), 3);
        assert_eq!(Error::Numerical("x".into()).exit_code(), 4);
        assert_eq!(Error::Io("x".into()).exit_code(), 5);
    }

    #[test]
    fn test_ensure_finite_rejects_nan_and_inf() {
        assert!(ensure_finite(1.0, "v").is_ok());
        assert!(ensure_finite(f64::NAN, "v").is_err());
        assert!(ensure_finite(f64::INFINITY, "v").is_err());
    }
}
