use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::spec::HFunctionSpec;
use crate::error::{Error, Result};
use crate::specfun::Scaled;

/// Constants of the exponential large-argument behaviour of `H_{p,m}^{m,0}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticParams {
    pub alpha_star: f64,
    pub m_star: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "B")]
    pub b: f64,
}

impl AsymptoticParams {
    pub fn of(spec: &HFunctionSpec) -> Result<Self> {
        spec.validate()?;
        if spec.n != 0 || spec.q != spec.m {
            return Err(Error::domain(format!(
                "large-argument form needs n = 0 and q = m, got m={}, n={}, q={}",
                spec.m, spec.n, spec.q
            )));
        }
        let m_star = spec.m_star();
        if !(m_star > 0.0) {
            return Err(Error::domain(format!("large-argument form needs Σ B - Σ A > 0, got {m_star}")));
        }
        let (p, q) = (spec.p as f64, spec.q as f64);
        let alpha_star = spec.upper.iter().map(|x| x.0).sum::<f64>() - spec.lower.iter().map(|x| x.0).sum::<f64>()
            + 0.5 * (q - p + 1.0);
        let ln_c = spec.upper.iter().map(|&(_, a)| a * a.ln()).sum::<f64>()
            - spec.lower.iter().map(|&(_, b)| b * b.ln()).sum::<f64>();
        let ln_b = 0.5 * (spec.m as f64 - p - 1.0) * (2.0 * PI).ln() + (1.0 - alpha_star) / m_star * ln_c
            - 0.5 * m_star.ln()
            + spec.upper.iter().map(|&(a, big_a)| (0.5 - a) * big_a.ln()).sum::<f64>()
            + spec.lower[..spec.m].iter().map(|&(b, big_b)| (b - 0.5) * big_b.ln()).sum::<f64>();
        Ok(Self { alpha_star, m_star, c: ln_c.exp(), b: ln_b.exp() })
    }
}

/// Leading large-argument behaviour
/// `B z^{(1-α*)/m*} exp(-m* C^{1/m*} z^{1/m*})` at the physical argument
/// `x`, including the `HFunctionSpec` prefactor and argument transforms.
pub fn h_asymptotic(spec: &HFunctionSpec, x: Complex64) -> Result<Complex64> {
    let s = h_asymptotic_scaled(spec, x)?;
    Ok(s.to_complex())
}

/// [`h_asymptotic`] with the exponential kept in `ln_scale`.
pub fn h_asymptotic_scaled(spec: &HFunctionSpec, x: Complex64) -> Result<Scaled> {
    let ap = AsymptoticParams::of(spec)?;
    let z = spec.argument(x);
    if z.norm() == 0.0 {
        return Err(Error::domain("large-argument form evaluated at zero"));
    }
    let ln_z = z.ln();
    let exponent = -ap.m_star * ap.c.powf(1.0 / ap.m_star) * (ln_z / ap.m_star).exp();
    let power = ln_z * ((1.0 - ap.alpha_star) / ap.m_star);
    let log_total = power + exponent;
    Ok(Scaled { value: spec.outer_factor(x) * ap.b * Complex64::from_polar(1.0, log_total.im), ln_scale: log_total.re })
}
