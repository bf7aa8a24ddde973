//! Shared error types for the line-oriented text formats.

use std::fmt;

use thiserror::Error;

use crate::mdiagram::MDiagramError;
use crate::tableau::TableauError;
use crate::webmap::WebError;

/// A syntax error, positioned at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Failure to read one of the text formats: either bad syntax or a
/// well-formed object that violates its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Diagram(#[from] MDiagramError),
    #[error(transparent)]
    Web(#[from] WebError),
}

/// Splits text into numbered, trimmed, nonempty lines. `;` also ends a
/// line so that whole objects fit in one shell argument.
pub(crate) fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split(['\n', ';'])
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the `N=<n>` header line.
pub(crate) fn parse_header(line_no: usize, line: &str) -> Result<usize, ParseError> {
    line.strip_prefix("N=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| ParseError::new(line_no, 1, format!("expected `N=<n>`, found `{line}`")))
}

/// Parses a nonnegative integer field, reporting its column on failure.
pub(crate) fn parse_num(line_no: usize, line: &str, token: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| {
        let column = token_column(line, token);
        ParseError::new(line_no, column, format!("expected a number, found `{token}`"))
    })
}

pub(crate) fn token_column(line: &str, token: &str) -> usize {
    let base = line.as_ptr() as usize;
    let at = token.as_ptr() as usize;
    if at >= base && at <= base + line.len() {
        at - base + 1
    } else {
        line.find(token).map_or(1, |i| i + 1)
    }
}
