//! Output sinks and small formatting helpers shared by the subcommands.

use crate::CliError;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

/// Runs `f` against `--out PATH` or a buffered standard output.
pub fn with_sink(
    out: &Option<PathBuf>,
    f: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            f(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Pretty JSON plus the terminating newline.
pub fn write_json<T: serde::Serialize>(w: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *w, value).map_err(|e| CliError::Io(io::Error::other(e)))?;
    writeln!(w)?;
    Ok(())
}

/// `(5, 3, 3, 3, 2, 2)`-style degree sequence rendering.
pub fn degrees(seq: &[usize]) -> String {
    let body: Vec<String> = seq.iter().map(|d| d.to_string()).collect();
    format!("({})", body.join(","))
}
