//! `poly`: evaluate the coloring polynomial `P(k) = sum_j r_j * k^(j)` at
//! requested palette sizes; with `--check`, also count valid labeled
//! colorings exhaustively and compare.

use crate::args::{Format, PolyArgs};
use crate::config::{FamilySel, NRange};
use crate::output::write_json;
use crate::CliError;
use bichroma::graphs::{build_fan, build_theta, build_two_tree, TriangleGraph};
use bichroma::kernel::KernelTables;
use bichroma::oracle::{count_colorings, oracle_spectrum, Constraint, MAX_PARTITION_N};
use bichroma::spectra::{eval_coloring_polynomial, fan_spectrum, theta_spectrum, FeatureVector};
use serde::Serialize;
use std::io::Write;

#[derive(Clone, Debug, Serialize)]
pub struct PolyValue {
    pub family: String,
    pub n: usize,
    pub k: u64,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

pub fn run(args: &PolyArgs, w: &mut dyn Write) -> Result<(), CliError> {
    let family = FamilySel::parse(&args.family)?;
    let range = family.resolve_range(args.n.map(NRange::single))?;
    let n = range.start;
    let mut tables = KernelTables::new();

    let spectrum: FeatureVector = match &family {
        FamilySel::Theta => theta_spectrum(n, &mut tables)?,
        FamilySel::Fan => fan_spectrum(n, &mut tables)?,
        FamilySel::Seq(seq) => {
            if n > MAX_PARTITION_N {
                return Err(CliError::usage(format!(
                    "--family: oracle spectra cap n at {MAX_PARTITION_N}, got {n}"
                )));
            }
            oracle_spectrum(&build_two_tree(seq), Constraint::Bichromatic)?
        }
    };

    let graph: Option<TriangleGraph> = if args.check {
        Some(match &family {
            FamilySel::Theta => build_theta(n)?,
            FamilySel::Fan => build_fan(n)?,
            FamilySel::Seq(seq) => build_two_tree(seq),
        })
    } else {
        None
    };

    let mut values = Vec::new();
    for &k in &args.k {
        let value = eval_coloring_polynomial(&spectrum, k);
        let check = match &graph {
            Some(g) => Some(
                count_colorings(g, k, Constraint::Bichromatic)
                    .map_err(|e| CliError::usage(format!("--check: {e}")))?,
            ),
            None => None,
        };
        let matches = check.as_ref().map(|c| *c == value);
        values.push(PolyValue {
            family: family.tag().to_string(),
            n,
            k,
            value: value.to_string(),
            check: check.map(|c| c.to_string()),
            matches,
        });
    }

    match args.format {
        Format::Json => write_json(w, &values)?,
        Format::Csv => {
            writeln!(w, "family,n,k,method,count")?;
            for v in &values {
                writeln!(w, "{},{},{},poly,{}", v.family, v.n, v.k, v.value)?;
                if let Some(check) = &v.check {
                    writeln!(w, "{},{},{},check,{}", v.family, v.n, v.k, check)?;
                }
            }
        }
        Format::Text => {
            for v in &values {
                write!(w, "{} n={} k={} poly={}", v.family, v.n, v.k, v.value)?;
                if let (Some(check), Some(matches)) = (&v.check, v.matches) {
                    let verdict = if matches { "ok" } else { "MISMATCH" };
                    write!(w, " check={check} {verdict}")?;
                }
                writeln!(w)?;
            }
        }
    }

    if let Some(bad) = values.iter().find(|v| v.matches == Some(false)) {
        return Err(CliError::Mismatch(format!(
            "{} n={} k={}: polynomial={} exhaustive={}",
            bad.family,
            bad.n,
            bad.k,
            bad.value,
            bad.check.as_deref().unwrap_or("?")
        )));
    }
    Ok(())
}
