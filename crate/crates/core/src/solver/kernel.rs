use num_complex::Complex64;

use crate::error::Result;
use crate::fracops::{prabhakar_apply, psi, SampledFunction};
use crate::problem::{ProblemSpec, SourceSpec};
use crate::specfun::ml_two;

/// Spectral argument `Λ(κ)`: `ψ(κ) - k²` for the Riesz-Feller variant and
/// `-(ψ(κ) + k²)` for the quantum variant and the wave kinds.
pub fn spectral_argument(prob: &ProblemSpec, kappa: f64) -> Complex64 {
    let p = psi(&prob.sym, kappa);
    let k2 = prob.k * prob.k;
    if prob.quantum_sign() {
        -(p + k2)
    } else {
        p - k2
    }
}

/// Fourier-space solution `N̂(κ, y)`: the integrand of the inverse Fourier
/// transform without the `e^{-iκx}` factor.
///
/// `y^{-λ} E_{μ,1-λ}(y^μ Λ) f̂ + y^{1-λ} E_{μ,2-λ}(y^μ Λ) ĝ` plus the
/// Prabhakar-convolved source, with `λ = (1-ν)(2-μ)`.
pub fn fourier_kernel(prob: &ProblemSpec, kappa: f64, y: f64) -> Result<Complex64> {
    prob.validate()?;
    if !(y > 0.0) {
        return Err(crate::Error::domain(format!("kernel needs y > 0, got {y}")));
    }
    kernel(prob, kappa, y)
}

pub(crate) fn kernel(prob: &ProblemSpec, kappa: f64, y: f64) -> Result<Complex64> {
    let mu = prob.ord.mu;
    let lambda = prob.lambda();
    let big_lambda = spectral_argument(prob, kappa);
    let arg = big_lambda * y.powf(mu);
    let mut total = Complex64::new(0.0, 0.0);
    if !prob.f.is_zero() {
        total += y.powf(-lambda) * ml_two(mu, 1.0 - lambda, arg)? * prob.f.eval(kappa);
    }
    if !prob.g.is_zero() {
        total += y.powf(1.0 - lambda) * ml_two(mu, 2.0 - lambda, arg)? * prob.g.eval(kappa);
    }
    match &prob.source {
        SourceSpec::Zero => {}
        SourceSpec::DeltaDelta => total += y.powf(mu - 1.0) * ml_two(mu, mu, arg)?,
        SourceSpec::DeltaPower { beta } => {
            total += y.powf(mu - beta) * ml_two(mu, mu - beta + 1.0, arg)?;
        }
        SourceSpec::Custom(phi) => {
            let re = {
                let phi = phi.clone();
                SampledFunction::smooth(move |s| phi(kappa, s).re)
            };
            let im = {
                let phi = phi.clone();
                SampledFunction::smooth(move |s| phi(kappa, s).im)
            };
            let i = Complex64::new(0.0, 1.0);
            total += prabhakar_apply(big_lambda, mu, &re, y)? + i * prabhakar_apply(big_lambda, mu, &im, y)?;
        }
    }
    Ok(total)
}
