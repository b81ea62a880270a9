use thiserror::Error;

/// Anything that stops a command from producing a document. Mathematical
/// verdicts are never errors.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Compute(#[from] gorpoints::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
