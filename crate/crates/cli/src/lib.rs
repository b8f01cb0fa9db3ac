//! Command implementations behind the `cliph` binary, split out as a library
//! so integration tests can drive them without spawning processes.

pub mod commands;
pub mod experiments;
pub mod io;
pub mod report;
pub mod svg;

use std::fmt;
use std::path::PathBuf;

#[derive(Debug)]
pub enum CliError {
    /// Filesystem trouble, with the path that caused it.
    Io { path: PathBuf, source: std::io::Error },
    /// Errors surfaced by the library (parsing, mismatched inputs).
    Core { path: Option<PathBuf>, source: cliph_core::Error },
    /// A file we read back did not have the expected shape.
    Format { path: PathBuf, line: usize, reason: String },
    /// Anything else the user asked for that cannot be done.
    Invalid(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => {
                write!(f, "{}: {source}", path.display())
            }
            CliError::Core { path: Some(path), source } => {
                write!(f, "{}: {source}", path.display())
            }
            CliError::Core { path: None, source } => write!(f, "{source}"),
            CliError::Format { path, line, reason } => {
                write!(f, "{}:{line}: {reason}", path.display())
            }
            CliError::Invalid(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<cliph_core::Error> for CliError {
    fn from(source: cliph_core::Error) -> Self {
        CliError::Core { path: None, source }
    }
}
