//! Command-line front end for `albert-core`: verification reports, an
//! expression evaluator and structure-constant export.

pub mod error;
pub mod expr;
pub mod sc;
pub mod verify;

pub use error::{CliError, Result};
