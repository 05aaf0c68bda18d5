use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("bad input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] brickyard_core::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
