//! Structure files, morphism expressions and the `hb` commands.

pub mod commands;
pub mod dsl;
pub mod error;
pub mod format;

pub use error::CliError;
