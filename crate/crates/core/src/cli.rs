//! Command-line front end. Every report is a sequence of `key: value` lines;
//! multi-line objects follow a `key:` line in their own text format.
//!
//! Exit codes: 0 success or accept, 1 reject or failed check, 2 usage or
//! parse error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cantor::{nabla_sup, StepFunction};
use crate::error::Error;
use crate::finite_ultra::{closed_quotient, ud_direct, validate, FiniteUltraSpace, Verdict};
use crate::injectivity::{
    attach_function, audit_attach, embed_space, embed_space_into_metrics, function_distances, isolated_counterexample,
    metric_distances, vestfrid_distance, vestfrid_embed, AttachRequest, DecreasingSequence,
};
use crate::oracles::run_selftest;
use crate::ultra_core::{RangeSet, Rat};

#[derive(Debug, Parser)]
#[command(name = "ultra-urysohn", version, about = "Exact finite ultrametric embeddings and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a distance matrix for the strong triangle inequality and friends
    Validate {
        matrix: PathBuf,
        /// Allow distinct points at distance 0
        #[arg(long)]
        pseudo: bool,
        #[arg(long)]
        range: Option<RangeSet>,
    },
    /// Distance between two objects of the chosen kind
    Distance {
        #[arg(long, value_enum)]
        kind: DistanceKind,
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        range: Option<RangeSet>,
    },
    /// Embed a strict ultrametric space and recompute its matrix
    Embed {
        #[arg(long, value_enum)]
        target: EmbedTarget,
        matrix: PathBuf,
        #[arg(long)]
        range: Option<RangeSet>,
    },
    /// Closed quotient at a radius
    Quotient {
        #[arg(long)]
        radius: Rat,
        matrix: PathBuf,
        #[arg(long)]
        pseudo: bool,
        #[arg(long)]
        range: Option<RangeSet>,
    },
    /// Build a function at distance exactly r from every family member near the pivot
    Attach {
        #[arg(long)]
        radius: Rat,
        /// The pivot function
        pivot: PathBuf,
        /// Further family members
        others: Vec<PathBuf>,
        #[arg(long)]
        range: Option<RangeSet>,
    },
    /// Exhaustively certify the isolated-point obstruction
    Counterexample {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        range: RangeSet,
    },
    /// Run the oracle-equivalence suite
    Selftest {
        #[arg(long, default_value_t = 20240101)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DistanceKind {
    Nabla,
    Ud,
    Vestfrid,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmbedTarget {
    Functions,
    Metrics,
    Vestfrid,
}

/// Failure that ends a command early.
enum Failure {
    Usage(String),
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidRangeSet(_) | Error::ValueOutsideRange { .. } | Error::InvalidPartition(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Rejected(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `argv` (program name first), runs the command and writes the report to `out`.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    let mut report = Vec::new();
    let outcome = dispatch(cli.command, &mut report);
    let (code, trailer) = match outcome {
        Ok(code) => (code, None),
        Err(Failure::Usage(msg)) => (2, Some(msg)),
        Err(Failure::Rejected(msg)) => (1, Some(msg)),
    };
    let _ = out.write_all(&report);
    if let Some(msg) = trailer {
        let _ = writeln!(out, "error: {msg}");
    }
    code
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: crate::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| match Failure::from(e) {
        Failure::Usage(m) => Failure::Usage(format!("{}: {m}", path.display())),
        Failure::Rejected(m) => Failure::Rejected(format!("{}: {m}", path.display())),
    })
}

fn block(out: &mut Vec<u8>, key: &str, body: &impl std::fmt::Display) {
    let _ = writeln!(out, "{key}:");
    let _ = write!(out, "{body}");
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Outcome {
    match command {
        Command::Validate { matrix, pseudo, range } => cmd_validate(&matrix, !pseudo, range.as_ref(), out),
        Command::Distance { kind, first, second, range } => cmd_distance(kind, &first, &second, range, out),
        Command::Embed { target, matrix, range } => cmd_embed(target, &matrix, range.as_ref(), out),
        Command::Quotient { radius, matrix, pseudo, range } => {
            let text = read(&matrix)?;
            let space = in_file(&matrix, FiniteUltraSpace::parse(&text, !pseudo, range.as_ref()))?;
            let q = closed_quotient(&space, radius)?;
            let _ = writeln!(out, "command: quotient");
            let _ = writeln!(out, "radius: {radius}");
            block(out, "input", &space);
            let _ = writeln!(out, "classes: {}", q.space.labels().join(" "));
            block(out, "quotient", &q.space);
            Ok(0)
        }
        Command::Attach { radius, pivot, others, range } => cmd_attach(radius, &pivot, &others, range, out),
        Command::Counterexample { points, range } => {
            let report = isolated_counterexample(points, &range)?;
            let _ = writeln!(out, "command: counterexample");
            let _ = writeln!(out, "points: {points}");
            let _ = writeln!(out, "range: {range}");
            let _ = writeln!(out, "radius: {}", report.radius);
            let _ = writeln!(out, "high: {}", report.high);
            block(out, "zeta", &report.zeta);
            let _ = writeln!(out, "candidates: {}", report.candidates_checked);
            match &report.witness {
                None => {
                    let _ = writeln!(out, "attachable: none");
                    let _ = writeln!(out, "certificate: absence");
                }
                Some(g) => block(out, "attachable", g),
            }
            block(out, "refinable-witness", &report.refinable_witness);
            Ok(if report.absence_certified() { 0 } else { 1 })
        }
        Command::Selftest { seed } => {
            let _ = writeln!(out, "command: selftest");
            let _ = writeln!(out, "seed: {seed}");
            let checks = run_selftest(seed);
            for c in &checks {
                let status = if c.passed { "pass" } else { "fail" };
                let _ = writeln!(out, "check: {} {} cases={}", c.name, status, c.cases);
                if !c.passed {
                    let _ = writeln!(out, "detail: {}", c.detail.replace('\n', " | "));
                }
            }
            let ok = checks.iter().all(|c| c.passed);
            let _ = writeln!(out, "result: {}", if ok { "pass" } else { "fail" });
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn cmd_validate(path: &Path, strict: bool, range: Option<&RangeSet>, out: &mut Vec<u8>) -> Outcome {
    let text = read(path)?;
    let space = in_file(path, FiniteUltraSpace::parse_unchecked(&text, strict, range))?;
    let _ = writeln!(out, "command: validate");
    let _ = writeln!(out, "points: {}", space.len());
    let _ = writeln!(out, "strict: {strict}");
    let _ = writeln!(out, "range: {}", space.range_set());
    match validate(&space) {
        Verdict::Accept => {
            let _ = writeln!(out, "verdict: accept");
            Ok(0)
        }
        Verdict::Reject(v) => {
            let _ = writeln!(out, "verdict: reject");
            let _ = writeln!(out, "violation: {}", v.describe(&space));
            if let crate::finite_ultra::Violation::StrongTriangle { x, y, z } = v {
                let _ = writeln!(out, "triple: {} {} {}", space.label(x), space.label(y), space.label(z));
            }
            Ok(1)
        }
    }
}

/// Parses two matrices over a shared range set (explicit, or the union of entries).
fn matrix_pair(a: &Path, b: &Path, range: Option<RangeSet>) -> std::result::Result<(FiniteUltraSpace, FiniteUltraSpace), Failure> {
    let (ta, tb) = (read(a)?, read(b)?);
    let (da, db) = (
        in_file(a, FiniteUltraSpace::parse(&ta, false, range.as_ref()))?,
        in_file(b, FiniteUltraSpace::parse(&tb, false, range.as_ref()))?,
    );
    if range.is_some() {
        return Ok((da, db));
    }
    let shared = RangeSet::from_values(da.range_set().values().iter().chain(db.range_set().values()).copied());
    Ok((
        FiniteUltraSpace::new(da.labels().to_vec(), da.matrix(), false, shared.clone())?,
        FiniteUltraSpace::new(db.labels().to_vec(), db.matrix(), false, shared)?,
    ))
}

/// Value tokens of step-function files, for inferring a range set.
fn step_values(text: &str) -> Vec<Rat> {
    text.lines()
        .filter_map(|l| l.split('#').next().unwrap().split_whitespace().nth(1))
        .filter_map(|v| v.parse().ok())
        .collect()
}

fn step_functions(paths: &[&Path], range: Option<RangeSet>, extra: &[Rat]) -> std::result::Result<(Vec<StepFunction>, RangeSet), Failure> {
    let texts = paths.iter().map(|p| read(p)).collect::<std::result::Result<Vec<_>, _>>()?;
    let range = range.unwrap_or_else(|| {
        RangeSet::from_values(texts.iter().flat_map(|t| step_values(t)).chain(extra.iter().copied()))
    });
    let fs = paths
        .iter()
        .zip(&texts)
        .map(|(p, t)| in_file(p, StepFunction::parse(t, &range).map_err(Error::from)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok((fs, range))
}

fn cmd_distance(kind: DistanceKind, a: &Path, b: &Path, range: Option<RangeSet>, out: &mut Vec<u8>) -> Outcome {
    let _ = writeln!(out, "command: distance");
    match kind {
        DistanceKind::Nabla => {
            let (fs, range) = step_functions(&[a, b], range, &[])?;
            let _ = writeln!(out, "kind: nabla");
            let _ = writeln!(out, "range: {range}");
            let _ = writeln!(out, "distance: {}", nabla_sup(&fs[0], &fs[1]));
        }
        DistanceKind::Ud => {
            let (d, e) = matrix_pair(a, b, range)?;
            let _ = writeln!(out, "kind: ud");
            let _ = writeln!(out, "range: {}", d.range_set());
            let _ = writeln!(out, "distance: {}", ud_direct(&d, &e)?);
        }
        DistanceKind::Vestfrid => {
            let parse = |p: &Path| -> std::result::Result<DecreasingSequence, Failure> {
                let text = read(p)?;
                let line = text
                    .lines()
                    .map(|l| l.split('#').next().unwrap().trim())
                    .find(|l| !l.is_empty())
                    .unwrap_or("0");
                line.parse().map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
            };
            let (x, y) = (parse(a)?, parse(b)?);
            let _ = writeln!(out, "kind: vestfrid");
            let _ = writeln!(out, "first: {x}");
            let _ = writeln!(out, "second: {y}");
            let _ = writeln!(out, "distance: {}", vestfrid_distance(&x, &y));
        }
    }
    Ok(0)
}

fn cmd_embed(target: EmbedTarget, path: &Path, range: Option<&RangeSet>, out: &mut Vec<u8>) -> Outcome {
    let text = read(path)?;
    let space = in_file(path, FiniteUltraSpace::parse(&text, true, range))?;
    let range = space.range_set().clone();
    let _ = writeln!(out, "command: embed");
    let _ = writeln!(out, "range: {range}");
    block(out, "input", &space);
    let recomputed = match target {
        EmbedTarget::Functions => {
            let _ = writeln!(out, "target: functions");
            let points = embed_space(&space, &StepFunction::zero(range.clone()))?;
            for (label, f) in &points {
                block(out, &format!("point {label}"), f);
            }
            function_distances(&points, &range)?
        }
        EmbedTarget::Metrics => {
            let _ = writeln!(out, "target: metrics");
            let points = embed_space_into_metrics(&space)?;
            for (label, m) in &points {
                block(out, &format!("point {label}"), m);
            }
            metric_distances(&points, &range)?
        }
        EmbedTarget::Vestfrid => {
            let _ = writeln!(out, "target: vestfrid");
            let seqs = vestfrid_embed(&space)?;
            for (label, s) in space.labels().iter().zip(&seqs) {
                let _ = writeln!(out, "point {label}: {s}");
            }
            FiniteUltraSpace::from_fn(space.labels().to_vec(), false, range.clone(), |i, j| {
                vestfrid_distance(&seqs[i], &seqs[j])
            })?
        }
    };
    block(out, "recomputed", &recomputed);
    let exact = recomputed.matrix() == space.matrix();
    let _ = writeln!(out, "exact: {exact}");
    Ok(if exact { 0 } else { 1 })
}

fn cmd_attach(radius: Rat, pivot: &Path, others: &[PathBuf], range: Option<RangeSet>, out: &mut Vec<u8>) -> Outcome {
    let mut paths: Vec<&Path> = vec![pivot];
    paths.extend(others.iter().map(PathBuf::as_path));
    let (family, range) = step_functions(&paths, range, &[radius])?;
    let req = AttachRequest::new(family.clone(), 0, radius)?;
    let g = attach_function(&req)?;
    let _ = writeln!(out, "command: attach");
    let _ = writeln!(out, "radius: {radius}");
    let _ = writeln!(out, "range: {range}");
    let _ = writeln!(out, "family: {}", family.len());
    block(out, "result", &g);
    let mut labelled: Vec<(String, StepFunction)> =
        family.into_iter().enumerate().map(|(i, f)| (format!("h{i}"), f)).collect();
    labelled.push(("g".to_string(), g));
    block(out, "recomputed", &function_distances(&labelled, &range)?);
    let pass = audit_attach(&req, &labelled.last().unwrap().1);
    let _ = writeln!(out, "audit: {}", if pass { "pass" } else { "fail" });
    Ok(if pass { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let code = run(std::iter::once("ultra-urysohn").chain(args.iter().copied()), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&[]).0, 2);
        assert_eq!(run_args(&["distance", "--kind", "euclid", "a", "b"]).0, 2);
        assert_eq!(run_args(&["counterexample", "--points", "2", "--range", "1,2"]).0, 2);
        assert_eq!(run_args(&["validate", "/nonexistent/matrix.txt"]).0, 2);
    }

    #[test]
    fn counterexample_small_range_is_rejection() {
        let (code, out) = run_args(&["counterexample", "--points", "2", "--range", "0,1"]);
        assert_eq!(code, 1, "{out}");
        assert!(out.contains("at least 3 values"));
    }
}
