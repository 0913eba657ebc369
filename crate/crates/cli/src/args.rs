use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "fracfield", version, about = "Fractional field equations in the half-space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a special function and print {"re", "im", "trunc_bound"}.
    #[command(subcommand)]
    Eval(Eval),
    /// Solve a problem on a grid and write CSV.
    Solve(SolveArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Point {
    /// Real part of the argument.
    #[arg(long, allow_negative_numbers = true)]
    pub z: f64,
    /// Imaginary part of the argument.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z_im: f64,
}

#[derive(Debug, Subcommand)]
pub enum Eval {
    /// Mittag-Leffler function E^γ_{α,β}(z).
    Ml {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        gamma: f64,
        #[command(flatten)]
        point: Point,
    },
    /// Wright function φ(a, b; z).
    Wright {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[command(flatten)]
        point: Point,
    },
    /// Fox H-function from a JSON parameter file, by its residue series.
    Foxh {
        #[arg(long)]
        spec: PathBuf,
        #[command(flatten)]
        point: Point,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Problem JSON file.
    #[arg(long)]
    pub problem: PathBuf,
    /// Grid JSON file.
    #[arg(long)]
    pub grid: PathBuf,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
    /// auto, pointwise, closed_form or series.
    #[arg(long, default_value = "auto")]
    pub method: fracfield::solver::Method,
    /// Relative tolerance of the pointwise inversion.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Width of the exp(-εκ²) damping that lets delta data use the
    /// pointwise path.
    #[arg(long)]
    pub regularization: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// identities, laplace_pairs, lemmas, hfunction, solutions or all.
    #[arg(long, default_value = "all")]
    pub suite: fracfield::verify::Suite,
    /// Replaces every check's tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Seed of the sampled test points.
    #[arg(long)]
    pub seed: Option<u64>,
}
