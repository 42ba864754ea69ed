//! Experiment harness for `sli-core`: representation-error sweeps,
//! simulated matrix-vector backward error, whitespace-delimited `.dat`
//! output, and the `sli` command line.

pub mod cli;
pub mod config;
pub mod dat;
pub mod matvec;
pub mod sweep;
pub mod system;

pub use dat::{ErrorRecord, ErrorTable};
pub use matvec::{matvec_backward_error, MatvecConfig};
pub use sweep::{repr_error_sweep, SweepConfig};
pub use system::System;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Sli(#[from] sli_core::Error),
    #[error("bad configuration: {0}")]
    Config(String),
    #[error("malformed data file: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
