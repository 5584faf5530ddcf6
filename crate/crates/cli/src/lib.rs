//! Command-line front end: input-file parsing, subcommands, DOT/JSON
//! emission, and the built-in counter-example verification.

pub mod commands;
pub mod input;
pub mod output;
pub mod paper;

pub use commands::run_from;

/// The example input shipped with the tool (also present as `paper.bq` in
/// the repository root).
pub const PAPER_BQ: &str = include_str!("../../../paper.bq");
