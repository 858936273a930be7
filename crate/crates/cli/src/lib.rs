//! Library side of the `rindler` command-line tool: sweep engine,
//! self-verification suite, config-file parsing and output formatting.

pub mod coeffs;
pub mod config;
pub mod names;
pub mod output;
pub mod sweep;
pub mod verify;

/// CLI-level failure with its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Exit 3: a value is outside its physical or documented range.
    Domain(String),
    /// Exit 4: file could not be read or written.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Io(m) => m,
        }
    }
}
