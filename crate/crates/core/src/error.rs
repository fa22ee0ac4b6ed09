//! Error type shared by every module, partitioned by how the CLI reports it.

/// Pipeline error. The variant decides the process exit code:
/// configuration 2, input format 3, resource 4, everything else 1.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration: bad weights, unknown language, empty keyword
    /// sets, broken flag combinations.
    #[error("config error: {0}")]
    Config(String),

    /// Malformed input data: corpus lines, model files, run files. Messages
    /// carry line numbers where available.
    #[error("format error: {0}")]
    Format(String),

    /// Missing or unusable linguistic resource: lexicons, embeddings,
    /// language models, pre-tagged token files.
    #[error("resource error: {0}")]
    Resource(String),

    /// Internal consistency violation, e.g. a scored tweet without a cluster
    /// assignment or out-of-range values fed to a scoring formula.
    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Format(_) => 3,
            Error::Resource(_) => 4,
            Error::Consistency(_) | Error::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
