//! Command-line surface over the `bichroma` library: spectrum computation,
//! closed-form-vs-oracle verification sweeps, feature-vector collision
//! search among small 2-trees, reference-sequence emission, and coloring
//! polynomial evaluation, with text, JSON, and CSV output.
//!
//! Exit status contract: 0 = success, 1 = a verification mismatch,
//! 2 = usage error or a size cap violation.

pub mod args;
pub mod commands;
pub mod config;
pub mod output;

use std::fmt;
use std::io;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, malformed inputs, or a size cap violation. Exit status 2.
    Usage(String),
    /// A verification check found differing values. Exit status 1.
    Mismatch(String),
    /// Output sink failure. Exit status 2.
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Mismatch(_) => 1,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Mismatch(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<bichroma::Error> for CliError {
    fn from(e: bichroma::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Runs one parsed invocation, writing to `--out` or standard output.
pub fn execute(cli: args::Cli) -> Result<(), CliError> {
    match &cli.command {
        args::Command::Spectrum(a) => output::with_sink(&a.out, |w| commands::spectrum::run(a, w)),
        args::Command::Verify(a) => output::with_sink(&a.out, |w| commands::verify::run(a, w)),
        args::Command::Collide(a) => output::with_sink(&a.out, |w| commands::collide::run(a, w)),
        args::Command::Oeis(a) => output::with_sink(&a.out, |w| commands::oeis::run(a, w)),
        args::Command::Poly(a) => output::with_sink(&a.out, |w| commands::poly::run(a, w)),
    }
}
