//! `spectrum`: feature vectors per requested n, by closed form, oracle, or
//! both, as text, a JSON report array, or long-format CSV rows.

use crate::args::{Format, MethodArg, SpectrumArgs};
use crate::config::FamilySel;
use crate::output::{degrees, write_json};
use crate::CliError;
use bichroma::graphs::{build_fan, build_theta, build_two_tree};
use bichroma::kernel::KernelTables;
use bichroma::oracle::{oracle_spectrum, Constraint, MAX_PARTITION_N};
use bichroma::spectra::{fan_spectrum, theta_spectrum, Method, SpectrumReport};
use std::io::Write;
use std::time::Instant;

pub fn run(args: &SpectrumArgs, w: &mut dyn Write) -> Result<(), CliError> {
    let family = FamilySel::parse(&args.family)?;
    let range = family.resolve_range(args.n)?;
    let methods = resolve_methods(&family, args.method)?;
    if methods.contains(&Method::Oracle) && range.end > MAX_PARTITION_N {
        return Err(CliError::usage(format!(
            "--n: the oracle method caps n at {MAX_PARTITION_N}, got {}",
            range.end
        )));
    }

    let mut tables = KernelTables::new();
    let mut reports = Vec::new();
    for n in range.iter() {
        for &method in &methods {
            reports.push(compute_report(
                &family,
                n,
                method,
                &mut tables,
                args.timing,
            )?);
        }
    }
    emit(w, args.format, &reports)
}

fn resolve_methods(family: &FamilySel, method: Option<MethodArg>) -> Result<Vec<Method>, CliError> {
    let closed_for_seq = Err(CliError::usage(
        "--method: no closed form for seq families; use `oracle`",
    ));
    match (method, family) {
        (None, FamilySel::Seq(_)) => Ok(vec![Method::Oracle]),
        (None, _) => Ok(vec![Method::Closed]),
        (Some(MethodArg::Closed) | Some(MethodArg::Both), FamilySel::Seq(_)) => closed_for_seq,
        (Some(MethodArg::Closed), _) => Ok(vec![Method::Closed]),
        (Some(MethodArg::Oracle), _) => Ok(vec![Method::Oracle]),
        (Some(MethodArg::Both), _) => Ok(vec![Method::Closed, Method::Oracle]),
    }
}

pub fn compute_report(
    family: &FamilySel,
    n: usize,
    method: Method,
    tables: &mut KernelTables,
    timing: bool,
) -> Result<SpectrumReport, CliError> {
    let start = Instant::now();
    let (vector, graph) = match (family, method) {
        (FamilySel::Theta, Method::Closed) => (theta_spectrum(n, tables)?, None),
        (FamilySel::Fan, Method::Closed) => (fan_spectrum(n, tables)?, None),
        (FamilySel::Theta, Method::Oracle) => {
            let g = build_theta(n)?;
            (oracle_spectrum(&g, Constraint::Bichromatic)?, Some(g))
        }
        (FamilySel::Fan, Method::Oracle) => {
            let g = build_fan(n)?;
            (oracle_spectrum(&g, Constraint::Bichromatic)?, Some(g))
        }
        (FamilySel::Seq(seq), Method::Oracle) => {
            let g = build_two_tree(seq);
            (oracle_spectrum(&g, Constraint::Bichromatic)?, Some(g))
        }
        (FamilySel::Seq(_), Method::Closed) => {
            unreachable!("rejected by resolve_methods")
        }
    };
    let mut report = SpectrumReport::new(family.tag(), n, method, vector);
    report.degree_sequence = graph.map(|g| g.degree_sequence());
    if timing {
        report.wall_time = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

fn emit(w: &mut dyn Write, format: Format, reports: &[SpectrumReport]) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(w, &reports)?,
        Format::Csv => {
            writeln!(w, "family,n,k,method,count")?;
            for r in reports {
                for (i, count) in r.vector.entries().iter().enumerate() {
                    writeln!(w, "{},{},{},{},{}", r.family, r.n, i + 1, r.method, count)?;
                }
            }
        }
        Format::Text => {
            for r in reports {
                write!(w, "{} n={} {} {}", r.family, r.n, r.method, r.vector)?;
                if let Some(total) = &r.total {
                    write!(w, " total={total}")?;
                }
                if let Some(seq) = &r.degree_sequence {
                    write!(w, " degrees={}", degrees(seq))?;
                }
                if let Some(t) = r.wall_time {
                    write!(w, " time={t:.6}s")?;
                }
                writeln!(w)?;
            }
        }
    }
    Ok(())
}
