//! Command-line front end.
//!
//! Exit codes: 0 when the command ran and everything checked held, 1 when a
//! check found a violation (residual over tolerance, failed axiom, rejected
//! polynomial), 2 on usage errors, unreadable input or invalid parameters.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qtop_core::braid::{BraidWord, FIXED_POINT_BOUND};
use qtop_core::continuum::{
    certify, right_mul_curves, verify_homeomorphism_all, verify_idempotency, verify_proof_cases,
    Certificate, ContinuumQuandle, ContinuumSpec, Domain, LocusInvariant, VerificationReport,
    DEFAULT_INVERSE_TOLERANCE, DEFAULT_TOLERANCE,
};
use qtop_core::finite::{are_isomorphic, check_quandle, check_rack, inner_group, Axiom};
use qtop_core::poly::{check_polynomial_quandle, check_polynomial_rack};

use crate::format::{axioms_json, load_poly, LocusJson, QuandleVerdictJson, RackVerdictJson, ReportJson};
use crate::names::{parse_quandle, parse_spec};
use crate::{csv, parallel};

/// Largest per-axis grid accepted for domains of dimension two or more.
pub const MAX_MULTI_DIM_GRID: usize = 21;

#[derive(Debug, Parser)]
#[command(name = "qtop", version, about = "Finite and topological quandles: construction and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a finite quandle and describe its inner group.
    Finite(FiniteArgs),
    /// Measure axiom residuals of a continuum construction on a grid.
    Verify(VerifyArgs),
    /// Trivial locus of a continuum construction, optionally compared with another.
    Locus(LocusArgs),
    /// Fixed points of a braid word acting on tuples over a finite quandle.
    Braid(BraidArgs),
    /// Exact polynomial quandle / rack check on [0, 1].
    Poly(PolyArgs),
    /// Right-multiplication curves of the unit-interval operation, as CSV.
    Curves(CurvesArgs),
}

#[derive(Debug, Args)]
pub struct FiniteArgs {
    /// Quandle name (e.g. `dihedral:5`, `conj:symmetric:3`) or JSON file.
    #[arg(long)]
    pub quandle: String,
    /// Check only the rack axioms (skip idempotency).
    #[arg(long)]
    pub rack: bool,
    /// Second quandle to test for isomorphism.
    #[arg(long)]
    pub compare: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    All,
    Idempotency,
    Distributivity,
    Homeomorphism,
    Inverse,
    Cases,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Construction name (e.g. `unit-interval`, `ball:2:paper`) or JSON file.
    #[arg(long)]
    pub spec: String,
    /// Sample points per axis.
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Tolerance for inverse round trips.
    #[arg(long, default_value_t = DEFAULT_INVERSE_TOLERANCE)]
    pub inverse_tol: f64,
    #[arg(long, value_enum, default_value_t = CheckArg::All)]
    pub check: CheckArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["spec", "family_n"])))]
pub struct LocusArgs {
    #[arg(long)]
    pub spec: Option<String>,
    /// Shorthand for `--spec family-fn:N`.
    #[arg(long)]
    pub family_n: Option<usize>,
    /// Second construction; emits the component-count certificate.
    #[arg(long)]
    pub against: Option<String>,
    #[arg(long, default_value_t = 2001)]
    pub grid: usize,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Emit the locus as CSV instead of JSON.
    #[arg(long)]
    pub csv: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BraidArgs {
    #[arg(long)]
    pub quandle: String,
    #[arg(long)]
    pub strands: usize,
    /// Comma-separated signed generator indices, e.g. `1,-2,1`.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub word: Vec<i32>,
    /// Refuse to enumerate more tuples than this.
    #[arg(long, default_value_t = FIXED_POINT_BOUND)]
    pub bound: u64,
    /// List fixed tuples only when there are at most this many.
    #[arg(long, default_value_t = 1000)]
    pub max_tuples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// JSON list of `{"i", "j", "num", "den"}` coefficient records.
    #[arg(long)]
    pub input: PathBuf,
    /// Run the rack check instead of the quandle check.
    #[arg(long)]
    pub rack: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CurvesArgs {
    /// Values of ε = y − ½ in [0, ½].
    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.3, 0.5])]
    pub epsilons: Vec<f64>,
    /// Sample points on [0, ½].
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure to run a command at all (exit code 2).
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(String);

fn usage(e: impl ToString) -> UsageError {
    UsageError(e.to_string())
}

/// Text to emit plus whether a check found a violation.
struct Outcome {
    text: String,
    finding: bool,
}

fn json_text(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn continuum(spec: ContinuumSpec) -> Result<ContinuumQuandle, UsageError> {
    ContinuumQuandle::new(spec).map_err(usage)
}

fn check_grid(q: &ContinuumQuandle, grid: usize) -> Result<(), UsageError> {
    if q.dim() >= 2 && grid > MAX_MULTI_DIM_GRID {
        return Err(usage(format!(
            "grid {grid} too large for a {}-dimensional domain (at most {MAX_MULTI_DIM_GRID} per axis)",
            q.dim()
        )));
    }
    Ok(())
}

fn finite(args: &FiniteArgs) -> Result<Outcome, UsageError> {
    let q = parse_quandle(&args.quandle).map_err(usage)?;
    let report = if args.rack { check_rack(&q) } else { check_quandle(&q) };
    let invertible = report.verdict(Axiom::RightInvertibility).is_some_and(|v| v.holds);
    let inner = if invertible {
        let g = inner_group(&q).map_err(usage)?;
        json!({ "order": g.order, "orbits": g.orbits, "connected": g.is_transitive() })
    } else {
        Value::Null
    };
    let compare = match &args.compare {
        None => Value::Null,
        Some(name) => {
            let other = parse_quandle(name).map_err(usage)?;
            let map = are_isomorphic(&q, &other).map_err(usage)?;
            json!({ "label": other.label(), "isomorphic": map.is_some(), "map": map })
        }
    };
    let body = json!({
        "label": q.label(),
        "n": q.size(),
        "structure": if args.rack { "rack" } else { "quandle" },
        "passed": report.passed(),
        "axioms": axioms_json(&report),
        "inner_group": inner,
        "compare": compare,
        "table": q.rows(),
    });
    Ok(Outcome { text: json_text(&body), finding: !report.passed() })
}

fn verify(args: &VerifyArgs) -> Result<Outcome, UsageError> {
    let q = continuum(parse_spec(&args.spec).map_err(usage)?)?;
    check_grid(&q, args.grid)?;
    let workers = parallel::threads();
    let want = |c: CheckArg| args.check == CheckArg::All || args.check == c;
    let mut reports: Vec<VerificationReport> = Vec::new();
    if want(CheckArg::Idempotency) {
        reports.push(verify_idempotency(&q, args.grid, args.tol).map_err(usage)?);
    }
    if want(CheckArg::Distributivity) {
        reports.push(parallel::distributivity(&q, args.grid, args.tol, workers).map_err(usage)?);
    }
    if want(CheckArg::Homeomorphism) {
        reports.push(verify_homeomorphism_all(&q, args.grid, args.tol).map_err(usage)?);
    }
    if want(CheckArg::Inverse) {
        reports.push(parallel::inverse(&q, args.grid, args.inverse_tol, workers).map_err(usage)?);
    }
    let has_cases = matches!(
        q.spec(),
        ContinuumSpec::UnitInterval { .. } | ContinuumSpec::ClosedInterval { .. }
    );
    if args.check == CheckArg::Cases || (args.check == CheckArg::All && has_cases) {
        reports.extend(verify_proof_cases(&q, args.grid, args.tol).map_err(usage)?);
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let body = json!({
        "spec": args.spec,
        "kind": q.spec().kind(),
        "grid": args.grid,
        "passed": passed,
        "reports": reports.iter().map(ReportJson::from).collect::<Vec<_>>(),
    });
    Ok(Outcome { text: json_text(&body), finding: !passed })
}

fn invariant_name(i: LocusInvariant) -> &'static str {
    match i {
        LocusInvariant::WholeDomain => "whole_domain",
        LocusInvariant::IntervalComponents => "interval_components",
        LocusInvariant::IsolatedPoints => "isolated_points",
    }
}

fn locus(args: &LocusArgs) -> Result<Outcome, UsageError> {
    let name = match (&args.spec, args.family_n) {
        (Some(s), _) => s.clone(),
        (None, Some(n)) => format!("family-fn:{n}"),
        (None, None) => unreachable!("clap requires one source"),
    };
    let workers = parallel::threads();
    let compute = |name: &str| -> Result<_, UsageError> {
        let q = continuum(parse_spec(name).map_err(usage)?)?;
        check_grid(&q, args.grid)?;
        let l = parallel::trivial_locus(&q, args.grid, args.tol, workers).map_err(usage)?;
        Ok((q, l))
    };
    let (q, l) = compute(&name)?;
    let Some(other) = &args.against else {
        let text = if args.csv { csv::locus(&l) } else { json_text(&json!({ "spec": name, "locus": LocusJson::from(&l) })) };
        return Ok(Outcome { text, finding: false });
    };
    if args.csv {
        return Err(usage("--csv cannot be combined with --against"));
    }
    let (q2, l2) = compute(other)?;
    for qq in [&q, &q2] {
        if !matches!(qq.domain(), Domain::Interval { closed: true, .. }) {
            return Err(usage(format!("certificates need compact intervals, not {}", qq.spec().kind())));
        }
    }
    let cert = match certify(&l, &l2).map_err(usage)? {
        Certificate::Nonisomorphic { invariant, left, right } => json!({
            "verdict": "nonisomorphic",
            "invariant": invariant_name(invariant),
            "left": left,
            "right": right,
        }),
        Certificate::Inconclusive => json!({ "verdict": "inconclusive" }),
    };
    let body = json!({
        "spec": name,
        "locus": LocusJson::from(&l),
        "against": { "spec": other, "locus": LocusJson::from(&l2) },
        "certificate": cert,
    });
    Ok(Outcome { text: json_text(&body), finding: false })
}

fn braid(args: &BraidArgs) -> Result<Outcome, UsageError> {
    let q = parse_quandle(&args.quandle).map_err(usage)?;
    let w = BraidWord::new(args.strands, args.word.clone()).map_err(usage)?;
    let fp = parallel::fixed_points(&q, &w, args.bound, parallel::threads()).map_err(usage)?;
    let shown = fp.count() <= args.max_tuples;
    let body = json!({
        "quandle": q.label(),
        "strands": w.strands(),
        "word": w.letters(),
        "count": fp.count(),
        "tuples": if shown { json!(fp.tuples) } else { Value::Null },
    });
    Ok(Outcome { text: json_text(&body), finding: false })
}

fn poly(args: &PolyArgs) -> Result<Outcome, UsageError> {
    let p = load_poly(&args.input).map_err(usage)?;
    let (verdict, finding) = if args.rack {
        let v = check_polynomial_rack(&p);
        (json!({ "rack": RackVerdictJson::from(&v) }), !v.is_valid())
    } else {
        let v = check_polynomial_quandle(&p);
        (json!({ "quandle": QuandleVerdictJson::from(&v) }), !v.is_forced_trivial())
    };
    let mut body = json!({ "polynomial": p.to_string() });
    body.as_object_mut().expect("object").extend(verdict.as_object().expect("object").clone());
    Ok(Outcome { text: json_text(&body), finding })
}

fn curves(args: &CurvesArgs) -> Result<Outcome, UsageError> {
    let rows = right_mul_curves(&args.epsilons, args.samples).map_err(usage)?;
    Ok(Outcome { text: csv::curves(&rows), finding: false })
}

fn execute(cli: &Cli) -> Result<(Outcome, Option<&PathBuf>), UsageError> {
    Ok(match &cli.command {
        Command::Finite(a) => (finite(a)?, a.out.as_ref()),
        Command::Verify(a) => (verify(a)?, a.out.as_ref()),
        Command::Locus(a) => (locus(a)?, a.out.as_ref()),
        Command::Braid(a) => (braid(a)?, a.out.as_ref()),
        Command::Poly(a) => (poly(a)?, a.out.as_ref()),
        Command::Curves(a) => (curves(a)?, a.out.as_ref()),
    })
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code. Output goes to `--out` when given, otherwise `stdout`.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let (outcome, out) = match execute(&cli) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let written = match out {
        Some(path) => fs::write(path, &outcome.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    i32::from(outcome.finding)
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
