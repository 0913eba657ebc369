use num_complex::Complex64;

use super::closed_form::catalog;
use crate::error::{Error, Result};
use crate::problem::ProblemSpec;
use crate::specfun::{wright_scaled, Scaled};

fn check(prob: &ProblemSpec) -> Result<Vec<super::closed_form::Term>> {
    let terms = catalog(prob).map_err(Error::NoSeriesForm)?;
    if prob.sym.alpha != 2.0 {
        return Err(Error::NoSeriesForm("the Wright-series form needs alpha = 2".into()));
    }
    if prob.ord.mu >= 2.0 {
        return Err(Error::NoSeriesForm("the Wright-series form needs mu < 2".into()));
    }
    Ok(terms)
}

/// Wright-function representation for `α = 2`, `θ = 0`: each kernel term
/// `y^p E_{μ,b}` contributes `(y^{p-μ/2}/2) φ(-μ/2, b-μ/2; -|x|/y^{μ/2})`.
pub fn solution_series(prob: &ProblemSpec, x: f64, y: f64) -> Result<f64> {
    let s = solution_series_scaled(prob, x, y)?;
    let v = s.to_complex().re;
    if s.value.norm() != 0.0 && (v == 0.0 || !v.is_finite()) {
        return Err(Error::OutOfRegime { value: s.ln_abs(), threshold: if s.ln_scale > 0.0 { 709.0 } else { -745.0 } });
    }
    Ok(v)
}

/// [`solution_series`] in scaled form, for arguments where the value leaves
/// the `f64` range.
pub fn solution_series_scaled(prob: &ProblemSpec, x: f64, y: f64) -> Result<Scaled> {
    let terms = check(prob)?;
    if !(y > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("series form needs finite x and y > 0, got ({x}, {y})")));
    }
    let mu = prob.ord.mu;
    let big_x = x.abs() / y.powf(mu / 2.0);
    let mut parts = Vec::with_capacity(terms.len());
    for t in terms {
        let w = wright_scaled(-mu / 2.0, t.b - mu / 2.0, Complex64::new(-big_x, 0.0))?;
        parts.push(w.scale(Complex64::new(0.5, 0.0), (t.p - mu / 2.0) * y.ln()));
    }
    Ok(sum_scaled(&parts))
}

pub(crate) fn sum_scaled(parts: &[Scaled]) -> Scaled {
    let nonzero = || parts.iter().filter(|s| s.value.norm() != 0.0);
    let top = nonzero().map(|s| s.ln_scale).fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return Scaled::unscaled(Complex64::new(0.0, 0.0));
    }
    let value = nonzero().map(|s| s.value * (s.ln_scale - top).exp()).sum();
    Scaled { value, ln_scale: top }
}
