use horopal::GeomError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed body spec: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid body spec: {0}")]
    Spec(String),
    #[error("invalid argument: {0}")]
    Arg(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

pub type CliResult<T> = std::result::Result<T, CliError>;
