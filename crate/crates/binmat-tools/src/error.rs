use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum ToolError {
    #[error(transparent)]
    Core(#[from] binmat::Error),
    /// A fixture failed to parse or one of its validations did not hold.
    #[error("fixture {entry}: {predicate}: {detail}")]
    Fixture {
        entry: String,
        predicate: String,
        detail: String,
    },
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

pub type ToolResult<T> = Result<T, ToolError>;
