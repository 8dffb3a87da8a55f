use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("infeasible configuration: {0}")]
    Infeasible(String),

    #[error("invalid trisection: {0}")]
    InvalidTrisection(String),

    #[error("root bracket failure: {0}")]
    Bracket(String),

    #[error("malformed body document: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
