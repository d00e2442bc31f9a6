use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A high-precision value failed to round to an integer within tolerance.
    #[error("precision error: {0}")]
    Precision(String),
    /// Independent routes to the same quantity disagree.
    #[error("verification error: {0}")]
    Verification(String),
    /// Brute-force enumeration refused because the input is too large.
    #[error("enumeration guard: {0}")]
    Guard(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
