use thiserror::Error;

/// Errors raised when an input falls outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),

    #[error("`{name}` must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("hermite degree {0} is outside the supported range 0..=30")]
    DegreeOutOfRange(u32),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid spacing {spacing} exceeds the maximum {max}")]
    SpacingTooCoarse { spacing: f64, max: f64 },

    #[error("only {valid} usable points for the eigenvalue ratio (need at least {required})")]
    DegenerateRatio { valid: usize, required: usize },

    #[error("expected a {expected} field, got a {found} field")]
    WrongRepresentation {
        expected: &'static str,
        found: &'static str,
    },

    #[error("invalid beam: {0}")]
    InvalidBeam(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}
