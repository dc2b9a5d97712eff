use std::fmt;

use thiserror::Error;

/// A 1-based source position.
///
/// Positions are diagnostics only; they do not take part in equality, so
/// that a reparsed specification equals the one it was printed from.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: {source}")]
    Semantic { pos: Pos, source: freeabel::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] freeabel::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn syntax(pos: Pos, msg: impl Into<String>) -> Self {
        CliError::Syntax { pos, msg: msg.into() }
    }

    pub fn at(pos: Pos, source: freeabel::Error) -> Self {
        CliError::Semantic { pos, source }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
