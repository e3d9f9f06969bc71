//! `mcl`: factor metrics, evaluate products and Hodge maps, and run the
//! identity suites from JSON problem files.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 degenerate or singular
//! input, 3 a reported check failed.

pub mod report;
pub mod spec;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use metric_clifford::suites::{self, Suite};
use metric_clifford::{gauge, hodge, metric, set_dimension_cap, Error, Metric64, HARD_MAX_DIM};
use serde_json::json;

use report::{CheckRecord, Output, Report};
use spec::{Problem, ProblemSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

/// Default tolerance for the factorization residual check.
pub const FACTOR_TOL: f64 = 1e-9;
/// Default tolerance for relation and reciprocity checks.
pub const RELATION_TOL: f64 = 1e-8;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse: {0}")]
    Parse(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Math(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(
                Error::DegenerateMetric { .. }
                | Error::SingularExtensor { .. }
                | Error::NotSymmetric { .. }
                | Error::NoConvergence { .. },
            ) => EXIT_DEGENERATE,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mcl", version, about = "Metric Clifford algebra toolkit")]
pub struct Cli {
    /// Problem file (JSON)
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Dimension when the problem file fixes none (identity metric)
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Gauge factorization g = h†∘η∘h
    Factor,
    /// Metric product of two labelled multivectors
    Product {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Standard or metric Hodge dual of a labelled multivector
    Hodge {
        #[arg(long, value_enum, default_value = "standard")]
        variant: Variant,
        #[arg(long)]
        label: String,
    },
    /// Seeded identity suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Metric reciprocal and gauge metric bases
    Bases,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Wedge,
    Scalar,
    Lcontract,
    Rcontract,
    Clifford,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Standard,
    Metric,
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

/// Applies `MC_MAX_DIM` when set.
pub fn apply_dimension_env() -> Result<(), CliError> {
    if let Ok(raw) = std::env::var("MC_MAX_DIM") {
        let cap: usize = raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("MC_MAX_DIM must be an integer, got `{raw}`")))?;
        if cap == 0 || cap > HARD_MAX_DIM {
            return Err(CliError::Usage(format!("MC_MAX_DIM must be in 1..={HARD_MAX_DIM}")));
        }
        set_dimension_cap(cap);
    }
    Ok(())
}

fn load(cli: &Cli) -> Result<Problem, CliError> {
    let spec = match &cli.input {
        Some(path) => ProblemSpec::parse(&std::fs::read_to_string(path)?)?,
        None => ProblemSpec::default(),
    };
    spec.resolve(cli.n)
}

fn echo(cli: &Cli) -> BTreeMap<String, serde_json::Value> {
    let mut m = BTreeMap::new();
    let name = match &cli.command {
        Command::Factor => "factor",
        Command::Product { op, lhs, rhs } => {
            m.insert("op".into(), json!(value_name(op)));
            m.insert("lhs".into(), json!(lhs));
            m.insert("rhs".into(), json!(rhs));
            "product"
        }
        Command::Hodge { variant, label } => {
            m.insert("variant".into(), json!(value_name(variant)));
            m.insert("label".into(), json!(label));
            "hodge"
        }
        Command::Verify { suite } => {
            m.insert("suite".into(), json!(suite.name()));
            "verify"
        }
        Command::Bases => "bases",
    };
    m.insert("name".into(), json!(name));
    if let Some(p) = &cli.input {
        m.insert("input".into(), json!(p.display().to_string()));
    }
    if let Some(n) = cli.n {
        m.insert("n".into(), json!(n));
    }
    if let Some(s) = cli.seed {
        m.insert("seed".into(), json!(s));
    }
    if let Some(t) = cli.tolerance {
        m.insert("tolerance".into(), json!(t));
    }
    if let Some(t) = cli.trials {
        m.insert("trials".into(), json!(t));
    }
    m
}

/// Runs a parsed command and returns its report.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let problem = load(cli)?;
    let mut report = Report::new(echo(cli));
    match &cli.command {
        Command::Factor => factor(cli, &problem, &mut report)?,
        Command::Product { op, lhs, rhs } => product(&problem, *op, lhs, rhs, &mut report)?,
        Command::Hodge { variant, label } => hodge_cmd(cli, &problem, *variant, label, &mut report)?,
        Command::Verify { suite } => verify(cli, &problem, *suite, &mut report)?,
        Command::Bases => bases(cli, &problem, &mut report)?,
    }
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

/// Full command-line entry: parses `args`, runs, writes the report and
/// returns the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Err(e) = apply_dimension_env() {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let text = report.to_json();
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: io: {e}");
        return EXIT_USAGE;
    }
    if report.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn factor(cli: &Cli, problem: &Problem, report: &mut Report) -> Result<(), CliError> {
    let g = Metric64::new(problem.metric.clone())?;
    let f = g.gauge();
    report.output("h", Output::extensor(f.h()));
    report.output("eta", Output::extensor(f.eta()));
    report.output("signature", Output::Signature { p: f.p(), q: f.q() });
    report.output("det_g", Output::Scalar { value: g.det() });
    report.output(
        "eigenvalues",
        Output::Values {
            values: g.spectral().eigenvalues.clone(),
        },
    );
    let residual = f.metric_extensor()?.max_abs_diff(g.extensor())? / g.extensor().norm_inf();
    let tol = cli.tolerance.or(problem.tolerance).unwrap_or(FACTOR_TOL);
    report.check(CheckRecord::single("factor", "factor.reconstruction", residual, tol));
    Ok(())
}

fn product(problem: &Problem, op: Op, lhs: &str, rhs: &str, report: &mut Report) -> Result<(), CliError> {
    let x = problem.label(lhs)?;
    let y = problem.label(rhs)?;
    if op == Op::Wedge {
        report.output("result", Output::multivector(&x.wedge(y)?));
        return Ok(());
    }
    let g = Metric64::new(problem.metric.clone())?;
    let out = match op {
        Op::Scalar => Output::Scalar { value: g.scalar(x, y)? },
        Op::Lcontract => Output::multivector(&g.left_contract(x, y)?),
        Op::Rcontract => Output::multivector(&g.right_contract(x, y)?),
        Op::Clifford => Output::multivector(&g.clifford(x, y)?),
        Op::Wedge => unreachable!(),
    };
    report.output("result", out);
    Ok(())
}

fn hodge_cmd(cli: &Cli, problem: &Problem, variant: Variant, label: &str, report: &mut Report) -> Result<(), CliError> {
    let x = problem.label(label)?;
    match variant {
        Variant::Standard => {
            let tau = hodge::std_tau(&problem.basis)?;
            report.output("tau", Output::multivector(&tau));
            report.output("result", Output::multivector(&hodge::std_hodge(x, &tau)?));
        }
        Variant::Metric => {
            let g = Metric64::new(problem.metric.clone())?;
            let tau_g = hodge::metric_tau(&g, &problem.basis)?;
            report.output("tau_g", Output::multivector(&tau_g));
            report.output("result", Output::multivector(&hodge::metric_hodge_with_tau(&g, x, &tau_g)?));
            let (lhs, rhs) = hodge::hodge_relation_standard(&g, x)?;
            let tol = cli.tolerance.or(problem.tolerance).unwrap_or(RELATION_TOL);
            report.check(CheckRecord::single(
                "hodge",
                "metric-hodge.relation-standard",
                lhs.relative_distance(&rhs)?,
                tol,
            ));
        }
    }
    Ok(())
}

fn verify(cli: &Cli, problem: &Problem, suite: Suite, report: &mut Report) -> Result<(), CliError> {
    let trials = cli.trials.unwrap_or(100);
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let metric = if problem.metric_given {
        // degenerate input stops here, before any suite runs
        Metric64::new(problem.metric.clone())?;
        Some(problem.metric.clone())
    } else {
        None
    };
    let dims = match cli.n {
        Some(n) if metric.is_none() => (n, n),
        _ => (2, 5),
    };
    if dims.0 == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let cfg = suites::Config {
        seed: cli.seed.or(problem.seed).unwrap_or(0),
        trials,
        dims,
        tolerance: cli.tolerance.or(problem.tolerance),
        metric,
    };
    for c in &suites::run(suite, &cfg)? {
        report.check(c.into());
    }
    Ok(())
}

fn bases(cli: &Cli, problem: &Problem, report: &mut Report) -> Result<(), CliError> {
    let g = Metric64::new(problem.metric.clone())?;
    let tol = cli.tolerance.or(problem.tolerance).unwrap_or(RELATION_TOL);
    let pair = metric::reciprocal_bases(&problem.frame, &g, &problem.basis)?;
    report.output("reciprocal", Output::basis(&pair));
    report.check(CheckRecord::single(
        "bases",
        "bases.metric-reciprocity",
        g.reciprocity_residual(&pair)?,
        tol,
    ));
    let gb = gauge::gauge_bases(g.gauge(), &problem.basis)?;
    report.output("gauge", Output::basis(&gb));
    report.check(CheckRecord::single(
        "bases",
        "gauge-bases.reciprocity",
        gb.b_residual()?,
        tol,
    ));
    Ok(())
}
