//! Library side of the `curvadd` command-line tool: report schema, command
//! implementations and the comparison against published claims.

pub mod claims;
pub mod commands;
pub mod report;

pub use commands::{CliError, EXIT_INCONSISTENT, EXIT_INVALID, EXIT_OK, EXIT_PARSE};
pub use report::AnalysisReport;
