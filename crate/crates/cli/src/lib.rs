//! Command-line driver for the Active Flux solvers: configuration, field
//! dumps, checksummed output directories and the experiment runners.

pub mod commands;
pub mod config;
pub mod dump;
pub mod manifest;
pub mod verify;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "AF_THREADS";
