//! Command-line front end: argument parsing, the presentation file format
//! and report rendering.

pub mod error;
pub mod format;
pub mod job;
pub mod report;

pub use error::CliError;
pub use format::{parse_presentation, serialize_presentation, PresentationFile};
pub use job::{run, Cli, Job};
pub use report::Report;
