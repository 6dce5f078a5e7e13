//! `oeis`: emit terms of the reference integer sequences this library
//! produces and compare them against embedded prefixes. No network access;
//! the references are fixed constants.
//!
//! * A390130: fan 4-block counts, starting at n = 6.
//! * A390131: fan 5-block counts, starting at n = 8.
//! * A390491: the array `A_r` by rows m >= 2; column 1 is the shifted
//!   Fibonacci sequence, column 2 is `3 * 2^{m-2}`.

use crate::args::{Format, OeisArgs};
use crate::output::write_json;
use crate::CliError;
use bichroma::kernel::{Count, KernelTables};
use bichroma::spectra::{fan_r4_closed, fan_r5_closed};
use serde::Serialize;
use std::io::Write;

pub const A390130_PREFIX: [u64; 8] = [1, 5, 19, 61, 180, 500, 1335, 3459];
pub const A390131_PREFIX: [u64; 8] = [1, 6, 29, 114, 410, 1366, 4341, 13264];
pub const A390491_COL1_PREFIX: [u64; 8] = [3, 5, 8, 13, 21, 34, 55, 89];
pub const A390491_COL2_PREFIX: [u64; 8] = [3, 6, 12, 24, 48, 96, 192, 384];

#[derive(Clone, Debug, Serialize)]
pub struct OeisReport {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<u64>,
    /// First index the computed terms take (n for the fan sequences, m for
    /// the array rows).
    pub start_index: usize,
    pub terms: Vec<String>,
    pub reference: Vec<String>,
    /// How many leading terms were compared against the reference.
    pub checked: usize,
    pub matches: bool,
}

pub fn compute(args: &OeisArgs, tables: &mut KernelTables) -> Result<OeisReport, CliError> {
    if args.count == 0 {
        return Err(CliError::usage("--count: must be at least 1"));
    }
    if args.column.is_some() && args.id != "A390491" {
        return Err(CliError::usage("--column: only meaningful for A390491"));
    }
    let (column, start_index, terms, reference): (Option<u64>, usize, Vec<Count>, &[u64]) =
        match args.id.as_str() {
            "A390130" => {
                let terms = (6..6 + args.count)
                    .map(|n| fan_r4_closed(n, tables))
                    .collect::<Result<Vec<_>, _>>()?;
                (None, 6, terms, &A390130_PREFIX)
            }
            "A390131" => {
                let terms = (8..8 + args.count)
                    .map(|n| fan_r5_closed(n, tables))
                    .collect::<Result<Vec<_>, _>>()?;
                (None, 8, terms, &A390131_PREFIX)
            }
            "A390491" => {
                let r = args.column.unwrap_or(1);
                if r == 0 {
                    return Err(CliError::usage("--column: columns are indexed from 1"));
                }
                let terms: Vec<Count> = (2..2 + args.count).map(|m| tables.big_a(m, r)).collect();
                let reference: &[u64] = match r {
                    1 => &A390491_COL1_PREFIX,
                    2 => &A390491_COL2_PREFIX,
                    _ => &[], // no embedded reference for other columns
                };
                (Some(r), 2, terms, reference)
            }
            other => {
                return Err(CliError::usage(format!(
                    "--id: unknown sequence {other:?}; expected A390130, A390131, or A390491"
                )))
            }
        };

    let checked = terms.len().min(reference.len());
    let matches = (0..checked).all(|i| terms[i] == Count::from(reference[i]));
    Ok(OeisReport {
        id: args.id.clone(),
        column,
        start_index,
        terms: terms.iter().map(|t| t.to_string()).collect(),
        reference: reference.iter().map(|t| t.to_string()).collect(),
        checked,
        matches,
    })
}

pub fn run(args: &OeisArgs, w: &mut dyn Write) -> Result<(), CliError> {
    let mut tables = KernelTables::new();
    let report = compute(args, &mut tables)?;
    match args.format {
        Format::Json => write_json(w, &report)?,
        Format::Csv => {
            writeln!(w, "id,index,term,reference,match")?;
            for (i, term) in report.terms.iter().enumerate() {
                let (reference, ok) = match report.reference.get(i) {
                    Some(r) => (r.as_str(), (term == r).to_string()),
                    None => ("", "unchecked".to_string()),
                };
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    report.id,
                    report.start_index + i,
                    term,
                    reference,
                    ok
                )?;
            }
        }
        Format::Text => {
            let label = match report.column {
                Some(r) => format!("{} column r={r}", report.id),
                None => report.id.clone(),
            };
            writeln!(w, "{label} terms: {}", report.terms.join(", "))?;
            if report.checked == 0 {
                writeln!(w, "{label} reference: none embedded")?;
            } else {
                writeln!(w, "{label} reference: {}", report.reference.join(", "))?;
                let verdict = if report.matches { "yes" } else { "NO" };
                writeln!(
                    w,
                    "{label} match: {verdict} ({} terms checked)",
                    report.checked
                )?;
            }
        }
    }
    if !report.matches {
        let first = (0..report.checked)
            .find(|&i| report.terms[i] != report.reference[i])
            .expect("mismatch implies a differing index");
        return Err(CliError::Mismatch(format!(
            "{} diverges from the embedded reference at index {}: computed={} reference={}",
            report.id,
            report.start_index + first,
            report.terms[first],
            report.reference[first]
        )));
    }
    Ok(())
}
