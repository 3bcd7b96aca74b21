//! Command-line front end for `specbound`: bound reports, inclusion-region
//! artifacts, oracle verification and family sweeps.
//!
//! [`args`] holds the clap definitions and [`commands::run`] executes a
//! parsed invocation, returning the text for standard output together with
//! the exit code.

pub mod args;
pub mod commands;
pub mod error;
pub mod formats;
pub mod input;
pub mod svg;
pub mod sweep;

pub use args::Cli;
pub use commands::{run, Output};
pub use error::CliError;
