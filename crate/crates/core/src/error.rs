//! Error type shared by every core subsystem.

use alloc::string::String;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Tensor or clip shapes do not satisfy an operation's contract.
    #[error("shape error: {0}")]
    Shape(String),
    /// An index or a value is outside its documented range.
    #[error("bounds error: {0}")]
    Bounds(String),
    /// A configuration value or key is invalid.
    #[error("config error: {0}")]
    Config(String),
    /// A structural contract was violated (freeze partitions, injection sites,
    /// adapter attachment rules).
    #[error("contract error: {0}")]
    Contract(String),
    /// Input data is malformed (missing frames, empty sequences).
    #[error("input error: {0}")]
    Input(String),
    /// Geometry is degenerate (rank-deficient covariance, behind-camera splats).
    #[error("degeneracy error: {0}")]
    Degenerate(String),
    /// A splat is not visible from the camera.
    #[error("visibility error: {0}")]
    Visibility(String),
    /// Numerical failure (non-finite statistics, eigenvalues out of tolerance).
    #[error("numeric error: {0}")]
    Numeric(String),
}

impl Error {
    pub fn shape(msg: impl core::fmt::Display) -> Self {
        Error::Shape(alloc::format!("{msg}"))
    }
    pub fn config(msg: impl core::fmt::Display) -> Self {
        Error::Config(alloc::format!("{msg}"))
    }
}
