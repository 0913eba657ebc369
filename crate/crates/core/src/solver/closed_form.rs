use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::foxh::{h_eval, h_reduce, h_series_with, mellin_cosine_map, ml_as_h};
use crate::problem::{BoundaryTransform, ProblemSpec, SourceSpec};
use crate::specfun::{rgamma, SeriesConfig};

/// One catalogued term `y^p E_{μ,b}(-y^μ |κ|^α)` of a delta-data kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Term {
    pub p: f64,
    pub b: f64,
}

/// Terms of the Fourier kernel for delta presets, or the reason the problem
/// falls outside the catalogue.
pub(crate) fn catalog(prob: &ProblemSpec) -> std::result::Result<Vec<Term>, String> {
    prob.validate().map_err(|e| e.to_string())?;
    if !prob.quantum_sign() {
        return Err("the riesz_feller variant grows in kappa; only the quantum sign has an H-function form".into());
    }
    if prob.sym.theta != 0.0 {
        return Err("catalogued forms need theta = 0".into());
    }
    if prob.k != 0.0 {
        return Err("no H-function form is catalogued for k != 0".into());
    }
    let mu = prob.ord.mu;
    let lambda = prob.lambda();
    let mut terms = Vec::new();
    match prob.f {
        BoundaryTransform::Zero => {}
        BoundaryTransform::Delta => terms.push(Term { p: -lambda, b: 1.0 - lambda }),
        _ => return Err(format!("f = {:?} is not a catalogued preset", prob.f)),
    }
    match prob.g {
        BoundaryTransform::Zero => {}
        BoundaryTransform::Delta => terms.push(Term { p: 1.0 - lambda, b: 2.0 - lambda }),
        _ => return Err(format!("g = {:?} is not a catalogued preset", prob.g)),
    }
    match prob.source {
        SourceSpec::Zero => {}
        SourceSpec::DeltaDelta => terms.push(Term { p: mu - 1.0, b: mu }),
        SourceSpec::DeltaPower { beta } => terms.push(Term { p: mu - beta, b: mu - beta + 1.0 }),
        SourceSpec::Custom(_) => return Err("custom sources have no catalogued form".into()),
    }
    Ok(terms)
}

/// True when [`solve_closed_form`] accepts the problem.
pub fn is_catalogued(prob: &ProblemSpec) -> bool {
    catalog(prob).is_ok() && prob.ord.mu < 2.0
}

/// Solution for delta data through the Mellin-cosine H-function form.
///
/// Each kernel term `y^p E_{μ,b}(-y^μ|κ|^α)` inverts to
/// `(y^p/|x|) H_{3,3}^{2,1}[|x|^α/y^μ | (1,1), (b,μ), (1,α/2); (1,α), (1,1), (1,α/2)]`,
/// which reduces to `H_{1,1}^{1,0}` for `α = 2`. At `x = 0` the Mellin
/// transform of the Mittag-Leffler function gives
/// `y^{p-μ/α} / (α sin(π/α) Γ(b - μ/α))`.
pub fn solve_closed_form(prob: &ProblemSpec, x: f64, y: f64) -> Result<f64> {
    let terms = catalog(prob).map_err(Error::NoClosedForm)?;
    let (mu, alpha) = (prob.ord.mu, prob.sym.alpha);
    if mu >= 2.0 {
        return Err(Error::NoClosedForm("mu = 2 kernels do not decay in kappa; use the pointwise path".into()));
    }
    if !(y > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("closed form needs finite x and y > 0, got ({x}, {y})")));
    }
    let ax = x.abs();
    let mut total = 0.0;
    for t in terms {
        total += if ax == 0.0 {
            y.powf(t.p - mu / alpha) * rgamma(t.b - mu / alpha) / (alpha * (PI / alpha).sin())
        } else {
            let v = match cosine_term(mu, t.b, alpha, y, ax) {
                Err(Error::CoincidentPoles { .. }) => {
                    // Rational α makes poles of Γ(1+αs) and Γ(1+s) coincide;
                    // the value is analytic in α, so take the symmetric
                    // limit with one Richardson step.
                    let sym = |h: f64| -> Result<f64> {
                        Ok(0.5 * (cosine_term(mu, t.b, alpha + h, y, ax)? + cosine_term(mu, t.b, alpha - h, y, ax)?))
                    };
                    let (h1, h2) = (COINCIDENCE_SHIFT, 0.5 * COINCIDENCE_SHIFT);
                    let (v1, v2) = (sym(h1)?, sym(h2)?);
                    (4.0 * v2 - v1) / 3.0
                }
                other => other?,
            };
            v * y.powf(t.p)
        };
    }
    Ok(total)
}

/// Relative truncation bound below which the residue series is trusted.
const SERIES_ACCURACY: f64 = 1e-11;

/// Shift of `α` used to step around coincident poles.
const COINCIDENCE_SHIFT: f64 = 2e-3;

/// `(1/π) ∫_0^∞ cos(κx) E_{μ,b}(-y^μ κ^α) dκ` through its H-function form.
fn cosine_term(mu: f64, b: f64, alpha: f64, y: f64, ax: f64) -> Result<f64> {
    let spec = h_reduce(&mellin_cosine_map(&ml_as_h(mu, b), 1.0, alpha, Complex64::new(y.powf(mu), 0.0))?);
    let x = Complex64::new(ax, 0.0);
    // The residue series loses accuracy to cancellation at large |x|; the
    // general evaluator then takes the Wright-function route where it can.
    let v = match h_series_with(&spec, x, &SeriesConfig::default()) {
        Ok(s) if s.trunc_bound <= SERIES_ACCURACY * s.value.norm() => s.value,
        Err(e @ Error::CoincidentPoles { .. }) => return Err(e),
        _ => h_eval(&spec, x)?,
    };
    Ok(v.re / PI)
}
