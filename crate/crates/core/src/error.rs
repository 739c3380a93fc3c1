use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid simple root: {0}")]
    InvalidRoot(String),
    #[error("group closure exceeded {limit} elements; generators are probably wrong")]
    ClosureOverflow { limit: usize },
    #[error("root finder did not converge: {0}")]
    RootNotConverged(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("degenerate point set: {0}")]
    DegenerateHull(String),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed mesh file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
