use std::fmt;

use thiserror::Error;

/// 1-based line and column of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ErrorKind {
    #[error("lexical error: {0}")]
    Lexical(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid name `{0}` (names are [A-Za-z0-9_]+)")]
    InvalidName(String),
    #[error("`{0}` is a reserved built-in name")]
    Reserved(String),
    #[error("{kind} `{name}` is already declared")]
    Redeclared { kind: &'static str, name: String },
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("`{label}` is not a point of {space}")]
    UnknownLabel { label: String, space: String },
    #[error("map `{map}` assigns `{label}` twice")]
    AssignedTwice { map: String, label: String },
    #[error("map `{map}` is not total: missing {missing}")]
    NotTotal { map: String, missing: String },
    #[error("map `{map}` is not monotone: `{x}` <= `{y}` but `{fx}` is not <= `{fy}`")]
    NotMonotone {
        map: String,
        x: String,
        y: String,
        fx: String,
        fy: String,
    },
    #[error("size {requested} exceeds the hard cap {cap}")]
    SizeCap { requested: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {kind}")]
pub struct NotationError {
    pub pos: Pos,
    pub kind: ErrorKind,
}

impl NotationError {
    pub fn new(pos: Pos, kind: ErrorKind) -> Self {
        Self { pos, kind }
    }

    /// Semantic (validation) errors as opposed to syntax errors.
    pub fn is_validation(&self) -> bool {
        matches!(self.kind, ErrorKind::NotMonotone { .. })
    }
}
