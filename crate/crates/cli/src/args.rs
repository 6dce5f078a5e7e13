//! Argument definitions. Counts in JSON output are decimal strings; all
//! output is UTF-8 and newline-terminated, and identical invocations produce
//! byte-identical output unless `--timing` is given.

use crate::config::NRange;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

const SEQ_GRAMMAR: &str = "two-tree sequence grammar:
  seq:<n>;<u1>-<v1>;<u2>-<v2>;...
with 0-based vertices. The initial triangle is {0, 1, 2}; attachment i
creates vertex i + 3 on an existing edge u-v, so exactly n - 3 attachments
are required. Examples: `seq:5;0-1;0-1` (theta), `seq:5;0-2;0-3` (fan),
`seq:4;0-1` (diamond).";

#[derive(Parser, Debug)]
#[command(
    name = "bichroma",
    version,
    about = "Exact chromatic feature vectors of 2-trees under the bichromatic triangle rule",
    after_help = SEQ_GRAMMAR
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute feature vectors by closed form, brute-force oracle, or both
    Spectrum(SpectrumArgs),
    /// Run closed-form-vs-oracle equality and identity checks over a range
    Verify(VerifyArgs),
    /// Find non-isomorphic 2-trees sharing a feature vector
    Collide(CollideArgs),
    /// Emit a reference integer sequence and compare with embedded terms
    Oeis(OeisArgs),
    /// Evaluate the coloring polynomial at chosen palette sizes
    Poly(PolyArgs),
}

#[derive(clap::Args, Debug)]
pub struct SpectrumArgs {
    /// Graph family: `theta`, `fan`, or `seq:<n;u-v;...>`
    #[arg(long)]
    pub family: String,
    /// Vertex count or inclusive range `A..B` (taken from the sequence for
    /// `seq:` families)
    #[arg(long, visible_alias = "n-range")]
    pub n: Option<NRange>,
    /// Defaults to `closed` for theta/fan and `oracle` for seq families
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall-clock seconds per report (breaks byte determinism)
    #[arg(long)]
    pub timing: bool,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Families to sweep
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [FamilyKind::Theta, FamilyKind::Fan])]
    pub families: Vec<FamilyKind>,
    /// Inclusive range `A..B`; the oracle caps n at 13 unless --closed-only
    #[arg(long, visible_alias = "n-range", default_value = "3..10")]
    pub n: NRange,
    /// Skip every oracle comparison; only closed-form identities remain
    #[arg(long)]
    pub closed_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Append total elapsed seconds (breaks byte determinism)
    #[arg(long)]
    pub timing: bool,
}

#[derive(clap::Args, Debug)]
pub struct CollideArgs {
    /// Vertex count, 3..=8 (exhaustive isomorphism-class enumeration)
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct OeisArgs {
    /// Sequence id: A390130, A390131, or A390491
    #[arg(long)]
    pub id: String,
    /// Number of terms to emit
    #[arg(long, default_value_t = 8)]
    pub count: usize,
    /// Column of the A390491 array (its rows are indexed by m >= 2)
    #[arg(long)]
    pub column: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct PolyArgs {
    /// Graph family: `theta`, `fan`, or `seq:<n;u-v;...>`
    #[arg(long)]
    pub family: String,
    /// Vertex count (taken from the sequence for `seq:` families)
    #[arg(long)]
    pub n: Option<usize>,
    /// Palette sizes, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub k: Vec<u64>,
    /// Also count valid labeled colorings exhaustively and compare
    #[arg(long)]
    pub check: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Theta,
    Fan,
}
