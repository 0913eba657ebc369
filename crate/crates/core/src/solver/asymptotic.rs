use std::f64::consts::PI;

use num_complex::Complex64;

use super::closed_form::catalog;
use super::series::sum_scaled;
use crate::error::{Error, Result};
use crate::foxh::{h_asymptotic_scaled, HFunctionSpec};
use crate::problem::{BoundaryTransform, ProblemSpec};
use crate::specfun::Scaled;

/// Default lower bound on `|x|/y^{μ/2}` for [`solution_asymptotic`].
pub const ASYMPTOTIC_THRESHOLD: f64 = 5.0;

/// Exponent `-((2-μ)/2) (μ/2)^{μ/(2-μ)} X^{2/(2-μ)}` of the stretched
/// exponential decay, with `X = |x|/y^{μ/2}`.
pub fn asymptotic_exponent(mu: f64, big_x: f64) -> f64 {
    -0.5 * (2.0 - mu) * (0.5 * mu).powf(mu / (2.0 - mu)) * big_x.powf(2.0 / (2.0 - mu))
}

/// Large-`|x|` behaviour of the `α = 2`, `θ = 0` delta-data solution, using
/// the default threshold.
pub fn solution_asymptotic(prob: &ProblemSpec, x: f64, y: f64) -> Result<f64> {
    solution_asymptotic_with(prob, x, y, ASYMPTOTIC_THRESHOLD)
}

pub fn solution_asymptotic_with(prob: &ProblemSpec, x: f64, y: f64, threshold: f64) -> Result<f64> {
    Ok(solution_asymptotic_scaled(prob, x, y, threshold)?.to_complex().re)
}

/// Scaled form of the asymptotic expression. The `f` term uses
/// `(μ/2)^{1-2ν+1/(2-μ)} / (2√((2-μ)π)) · y^{-λ}/|x| · X^{(1+2λ)/(2-μ)} e^{E}`
/// with `λ = (1-ν)(2-μ)` and `E` from [`asymptotic_exponent`]; every other
/// term uses the leading H-function asymptotics of
/// `(y^p/|x|) H_{1,1}^{1,0}[x²/y^μ | (b,μ); (1,2)]`.
pub fn solution_asymptotic_scaled(prob: &ProblemSpec, x: f64, y: f64, threshold: f64) -> Result<Scaled> {
    let terms = catalog(prob).map_err(Error::NoSeriesForm)?;
    let (mu, nu) = (prob.ord.mu, prob.ord.nu);
    if prob.sym.alpha != 2.0 || mu >= 2.0 {
        return Err(Error::NoSeriesForm("asymptotic form needs alpha = 2 and mu < 2".into()));
    }
    if !(y > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("asymptotic form needs finite x and y > 0, got ({x}, {y})")));
    }
    let ax = x.abs();
    let big_x = ax / y.powf(mu / 2.0);
    if !(big_x >= threshold) {
        return Err(Error::OutOfRegime { value: big_x, threshold });
    }
    let lambda = prob.lambda();
    let mut skip_f = matches!(prob.f, BoundaryTransform::Delta);
    let mut parts = Vec::with_capacity(terms.len());
    for t in terms {
        if skip_f && t.p == -lambda {
            skip_f = false;
            let ln_pre = (1.0 - 2.0 * nu + 1.0 / (2.0 - mu)) * (0.5 * mu).ln()
                - (2.0 * ((2.0 - mu) * PI).sqrt()).ln()
                - lambda * y.ln()
                - ax.ln()
                + (1.0 + 2.0 * lambda) / (2.0 - mu) * big_x.ln();
            parts.push(Scaled { value: Complex64::new(1.0, 0.0), ln_scale: ln_pre + asymptotic_exponent(mu, big_x) });
        } else {
            let mut spec = HFunctionSpec::new(1, 0, vec![(t.b, mu)], vec![(1.0, 2.0)]);
            spec.arg_power = 2.0;
            spec.arg_scale = Complex64::new(y.powf(-mu), 0.0);
            spec.outer_power = -1.0;
            let h = h_asymptotic_scaled(&spec, Complex64::new(ax, 0.0))?;
            parts.push(h.scale(Complex64::new(1.0, 0.0), t.p * y.ln()));
        }
    }
    Ok(sum_scaled(&parts))
}
