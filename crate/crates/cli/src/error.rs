use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] quadalg::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed presentation file: {0}")]
    Format(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    /// 3 for exceeded size bounds, 2 for every other rejection.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(quadalg::Error::SizeBound { .. }) => 3,
            _ => 2,
        }
    }
}
