use std::fmt;

use thiserror::Error;

/// A 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Errors that stop a command before any verdict is reached (exit code 2).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("invalid structure file: {0}")]
    Format(String),
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: unknown generator `{name}` for a {kind} structure")]
    UnknownGenerator { pos: Pos, name: String, kind: String },
    #[error("{pos}: type mismatch: expected {expected}, found {found}")]
    TypeMismatch { pos: Pos, expected: String, found: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hopfbrace::Error),
}
