//! Library half of the `hopfbrace` binary: the text format, report
//! rendering and the command dispatch, exposed so tests can drive the full
//! surface in process.

pub mod app;
pub mod format;
pub mod report;

pub use app::{run, run_args, Cli};
