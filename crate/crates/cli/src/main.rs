mod args;

use std::fs::File;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use fracfield::foxh::{h_series_with, HFunctionSpec};
use fracfield::problem::{GridSpec, ProblemSpec};
use fracfield::solver::{solve_grid_with, PointwiseOptions};
use fracfield::specfun::{ml_four_with, wright_with, MLParams, SeriesConfig, SeriesValue};
use fracfield::verify::{run_suite, VerifyOptions};
use fracfield::{Complex64, Error};
use serde::Serialize;

use args::{Cli, Command, Eval, SolveArgs, VerifyArgs};

/// Exit status for invalid input.
const EXIT_INPUT: u8 = 2;
/// Exit status for numerical failures.
const EXIT_NUMERIC: u8 = 3;
/// Exit status for failed verification checks.
const EXIT_VERIFY: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval(e) => eval(e),
        Command::Solve(s) => solve(s),
        Command::Verify(v) => verify(v),
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn numeric_exit(e: &Error) -> u8 {
    match e {
        Error::InvalidProblem(_) | Error::Validity(_) => EXIT_INPUT,
        _ => EXIT_NUMERIC,
    }
}

#[derive(Serialize)]
struct EvalOutput {
    re: f64,
    im: f64,
    trunc_bound: f64,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let file = File::open(path).map_err(|e| format!("cannot open {}: {e}", path.display()))?;
    serde_json::from_reader(file).map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn eval(cmd: Eval) -> ExitCode {
    let result: Result<SeriesValue, Error> = match cmd {
        Eval::Ml { alpha, beta, gamma, point } => {
            let z = Complex64::new(point.z, point.z_im);
            let params = MLParams { alpha, beta, gamma, kappa_ml: 1.0 };
            ml_four_with(params, z, &SeriesConfig::default())
        }
        Eval::Wright { a, b, point } => wright_with(a, b, Complex64::new(point.z, point.z_im)),
        Eval::Foxh { spec, point } => {
            let spec: HFunctionSpec = match read_json(&spec) {
                Ok(s) => s,
                Err(msg) => return fail(EXIT_INPUT, msg),
            };
            h_series_with(&spec, Complex64::new(point.z, point.z_im), &SeriesConfig::default())
        }
    };
    match result {
        Ok(v) => {
            let out = EvalOutput { re: v.value.re, im: v.value.im, trunc_bound: v.trunc_bound };
            println!("{}", serde_json::to_string(&out).expect("plain numbers serialize"));
            ExitCode::SUCCESS
        }
        Err(e) => fail(numeric_exit(&e), e),
    }
}

fn solve(args: SolveArgs) -> ExitCode {
    let prob: ProblemSpec = match read_json(&args.problem) {
        Ok(p) => p,
        Err(msg) => return fail(EXIT_INPUT, msg),
    };
    let grid: GridSpec = match read_json(&args.grid) {
        Ok(g) => g,
        Err(msg) => return fail(EXIT_INPUT, msg),
    };
    let mut opts = PointwiseOptions { regularization: args.regularization, ..Default::default() };
    if let Some(tol) = args.tol {
        if tol.is_nan() || tol <= 0.0 {
            return fail(EXIT_INPUT, format!("--tol must be positive, got {tol}"));
        }
        opts.tol = tol;
    }
    let rows = match solve_grid_with(&prob, &grid, args.method, &opts) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    if let Err(e) = write_csv(&args.out, &rows) {
        return fail(EXIT_INPUT, format!("cannot write {}: {e}", args.out.display()));
    }
    let failures = rows.iter().filter(|r| r.error.is_some()).count();
    let max_imag = rows.iter().filter(|r| r.error.is_none()).map(|r| r.imag_residual.abs()).fold(0.0, f64::max);
    for r in rows.iter().filter_map(|r| r.error.as_ref().map(|e| (r.x, r.y, &e.1))) {
        eprintln!("point ({}, {}): {}", r.0, r.1, r.2);
    }
    eprintln!("points: {}, failures: {failures}, max |imag residual|: {max_imag:.3e}", rows.len());
    if !rows.is_empty() && failures == rows.len() {
        return ExitCode::from(EXIT_NUMERIC);
    }
    ExitCode::SUCCESS
}

fn write_csv(path: &Path, rows: &[fracfield::solver::GridRow]) -> Result<(), Box<dyn std::error::Error>> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_path(path)?;
    w.write_record(["x", "y", "N", "imag_residual", "method", "error_flag"])?;
    for r in rows {
        let flag = r.error.as_ref().map_or("", |e| e.0.as_str());
        w.write_record([
            r.x.to_string(),
            r.y.to_string(),
            r.value.to_string(),
            r.imag_residual.to_string(),
            r.method.name().to_string(),
            flag.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn verify(args: VerifyArgs) -> ExitCode {
    let mut opts = VerifyOptions { tol: args.tol, ..Default::default() };
    if let Some(seed) = args.seed {
        opts.seed = seed;
    }
    let report = run_suite(args.suite, &opts);
    for c in &report.checks {
        eprintln!("{c}");
    }
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}
