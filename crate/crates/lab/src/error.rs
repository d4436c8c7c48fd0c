use banach_geom_core::GeomError;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed document: {0}")]
    Format(String),
    #[error("unknown space `{0}`")]
    UnknownSpace(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
}

pub type Result<T> = std::result::Result<T, LabError>;

pub fn format_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(LabError::Format(msg.into()))
}
