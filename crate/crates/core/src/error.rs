use thiserror::Error;

/// Errors raised when an operation's preconditions are not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid curve (g = {g}, nu = {nu}): {reason}")]
    InvalidCurve { g: i64, nu: i64, reason: String },

    #[error("{name} = {value} is out of range: {expected}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration window [{min}, {max}] is inconclusive: maximal vector {vector} touches the boundary")]
    InconclusiveWindow { min: i64, max: i64, vector: String },

    /// An internal consistency check failed. Never expected on valid input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Largest absolute value accepted for any integer parameter.
pub const PARAM_BOUND: i64 = 1_000_000;

pub(crate) fn bounded(name: &'static str, value: i64) -> Result<i64> {
    if value.abs() > PARAM_BOUND {
        return Err(Error::OutOfRange {
            name,
            value,
            expected: format!("|{name}| <= {PARAM_BOUND}"),
        });
    }
    Ok(value)
}

pub(crate) fn at_least(name: &'static str, value: i64, min: i64) -> Result<i64> {
    bounded(name, value)?;
    if value < min {
        return Err(Error::OutOfRange {
            name,
            value,
            expected: format!("{name} >= {min}"),
        });
    }
    Ok(value)
}
