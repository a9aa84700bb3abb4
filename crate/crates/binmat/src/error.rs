use alloc::string::String;
use core::fmt;

/// Failure modes shared by every operation in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Shapes or lengths do not line up.
    Dimension { expected: usize, found: usize },
    /// A label is unknown, duplicated, or collides with an existing one.
    Label(String),
    /// The input graph or matroid does not have the required structure.
    Structure(String),
    /// A precondition about the mathematical content of the input failed.
    Domain(String),
    /// The caller promised a relationship between inputs that does not hold.
    Contract(String),
    /// A desk-scale guard was tripped.
    Resource(String),
    /// Text could not be parsed.
    Parse { line: usize, message: String },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension { expected, found } => {
                write!(f, "dimension error: expected {expected}, found {found}")
            }
            Error::Label(msg) => write!(f, "label error: {msg}"),
            Error::Structure(msg) => write!(f, "structure error: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Contract(msg) => write!(f, "contract error: {msg}"),
            Error::Resource(msg) => write!(f, "resource error: {msg}"),
            Error::Parse { line, message } => write!(f, "parse error on line {line}: {message}"),
        }
    }
}

impl core::error::Error for Error {}
