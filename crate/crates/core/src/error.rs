use thiserror::Error;

/// Crate-wide error type.
///
/// `Structural` covers malformed inputs (dimension mismatches, empty factor
/// lists, out-of-range slots); `Contract` covers violated mathematical
/// preconditions (non-Hermitian operator where one is required);
/// `DimensionCap` is the dense-storage size limit; `Validation` is reserved
/// for scenario-file and CLI-level problems.
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("dimension cap exceeded: {0}")]
    DimensionCap(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
