use thiserror::Error;

/// Errors shared by all solver modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("policy fault: {0}")]
    PolicyFault(String),
}

pub type Result<T> = std::result::Result<T, Error>;
