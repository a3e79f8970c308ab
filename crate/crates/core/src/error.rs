use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A tile or cell lies outside the rectangle it is embedded in.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// An operation was called on input violating its documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A quantity was requested outside the range where it is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A line hits an integer height at an integer abscissa.
    #[error("degenerate line: {0}")]
    DegenerateLine(String),
    /// No covering with the requested parameters exists.
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("parse error{}: {message}", tile.map(|t| format!(" in tile {t}")).unwrap_or_default())]
    Parse {
        tile: Option<usize>,
        message: String,
    },
    /// An internal consistency check failed. Indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
