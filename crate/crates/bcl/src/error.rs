use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bcl_core::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("bad spec at `{token}`: {reason}")]
    Spec { token: String, reason: String },
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub(crate) fn spec(token: &str, reason: impl Into<String>) -> Self {
        CliError::Spec {
            token: token.to_string(),
            reason: reason.into(),
        }
    }
}
