use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::closed_form::{is_catalogued, solve_closed_form};
use super::pointwise::{solve_pointwise_with, PointwiseOptions};
use super::series::solution_series;
use crate::error::Result;
use crate::problem::{GridSpec, ProblemSpec};

/// Evaluation route for grid points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Closed form when the problem is catalogued, pointwise otherwise.
    #[default]
    Auto,
    Pointwise,
    ClosedForm,
    Series,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Self::Auto => "auto",
            Self::Pointwise => "pointwise",
            Self::ClosedForm => "closed_form",
            Self::Series => "series",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Self::Auto),
            "pointwise" => Ok(Self::Pointwise),
            "closed_form" => Ok(Self::ClosedForm),
            "series" => Ok(Self::Series),
            other => Err(format!("unknown method '{other}' (expected auto, pointwise, closed_form or series)")),
        }
    }
}

/// One evaluated grid point. A failed point keeps its error message and has
/// `value = NaN`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridRow {
    pub x: f64,
    pub y: f64,
    pub value: f64,
    pub imag_residual: f64,
    /// The route actually used; never `Auto`.
    pub method: Method,
    /// Error code and message of a failed point.
    pub error: Option<(String, String)>,
}

pub fn solve_grid(prob: &ProblemSpec, grid: &GridSpec, method: Method) -> Result<Vec<GridRow>> {
    solve_grid_with(prob, grid, method, &PointwiseOptions::default())
}

/// Evaluates every grid point in parallel; rows follow grid order (`y`
/// outer, `x` inner) regardless of scheduling.
pub fn solve_grid_with(prob: &ProblemSpec, grid: &GridSpec, method: Method, opts: &PointwiseOptions) -> Result<Vec<GridRow>> {
    prob.validate()?;
    grid.validate()?;
    let resolved = match method {
        Method::Auto if is_catalogued(prob) => Method::ClosedForm,
        Method::Auto => Method::Pointwise,
        m => m,
    };
    Ok(grid.points().into_par_iter().map(|(x, y)| point(prob, x, y, resolved, opts)).collect())
}

fn point(prob: &ProblemSpec, x: f64, y: f64, method: Method, opts: &PointwiseOptions) -> GridRow {
    let res = match method {
        Method::Pointwise => solve_pointwise_with(prob, x, y, opts).map(|p| (p.value, p.imag_residual)),
        Method::Series => solution_series(prob, x, y).map(|v| (v, 0.0)),
        _ => solve_closed_form(prob, x, y).map(|v| (v, 0.0)),
    };
    let (value, imag_residual, error) = match res {
        Ok((v, r)) => (v, r, None),
        Err(e) => (f64::NAN, f64::NAN, Some((e.code().to_string(), e.to_string()))),
    };
    GridRow { x, y, value, imag_residual, method, error }
}
