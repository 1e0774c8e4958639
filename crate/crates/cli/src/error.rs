use albert_core::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CliError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" | "))]
    Syntax { offset: usize, expected: Vec<String>, found: String },
    #[error("type error at byte {offset}: {message}")]
    Type { offset: usize, message: String },
    #[error("unbound name `{0}`")]
    Unbound(String),
    #[error("`{0}` is reserved and cannot be rebound")]
    Reserved(String),
    #[error("{0} basis is only available for oct")]
    InvalidCombination(String),
    #[error("malformed structure-constant file: {0}")]
    Format(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
