//! Std companion to `hypercert`: hypergraph files, JSON reports,
//! verification suites and the `hypercert` command-line tool.

pub mod cli;
pub mod format;
pub mod report;
pub mod verify;

pub use cli::run;
