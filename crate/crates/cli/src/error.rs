use std::fmt;

/// Failures that stop a command before it produces a verdict. Both map to
/// exit code 2.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, or arguments the library rejects.
    Input(String),
    /// A report that fails its own round-trip validation.
    Internal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl From<modnet::Error> for CliError {
    fn from(e: modnet::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
