use num_complex::Complex64;

use super::spec::HFunctionSpec;
use crate::error::{Error, Result};

/// Parameters of the H-function produced by the Mellin-cosine transform
/// `∫_0^∞ κ^{ρ-1} cos(κx) H[a κ^δ] dκ`.
///
/// `spec` supplies the raw H-function parameters and prefactor; its argument
/// fields are ignored since the integrand argument is `a κ^δ`. The result,
/// evaluated at `x > 0`, is
/// `π x^{-ρ} H_{q+1,p+2}^{n+1,m}[x^δ / a | (1-b_q, B_q), ((1+ρ)/2, δ/2);
/// (ρ, δ), (1-a_p, A_p), ((1+ρ)/2, δ/2)]`.
///
/// The transform is valid when `ρ + δ min_{j<=m} b_j/B_j > 0` (integrability
/// at the origin), `ρ + δ max_{j<=n} (a_j - 1)/A_j < 3/2`, `θ* > 0` and
/// `|arg a| < π θ*/2`; every failing condition is listed in the error.
pub fn mellin_cosine_map(spec: &HFunctionSpec, rho: f64, delta: f64, a: Complex64) -> Result<HFunctionSpec> {
    spec.validate()?;
    if !(delta > 0.0) {
        return Err(Error::Validity(vec![format!("delta = {delta} must be positive")]));
    }
    let mut failures = Vec::new();
    let min_b = spec.lower[..spec.m].iter().map(|&(b, bb)| b / bb).fold(f64::INFINITY, f64::min);
    if !(rho + delta * min_b > 0.0) {
        failures.push(format!("rho + delta * min(b_j/B_j) = {} is not > 0", rho + delta * min_b));
    }
    if spec.n > 0 {
        let max_a = spec.upper[..spec.n].iter().map(|&(a, aa)| (a - 1.0) / aa).fold(f64::NEG_INFINITY, f64::max);
        if !(rho + delta * max_a < 1.5) {
            failures.push(format!("rho + delta * max((a_j-1)/A_j) = {} is not < 3/2", rho + delta * max_a));
        }
    }
    let theta = spec.theta_star();
    if !(theta > 0.0) {
        failures.push(format!("theta* = {theta} is not > 0"));
    }
    if a.norm() == 0.0 {
        failures.push("a must be nonzero".to_string());
    } else if !(a.arg().abs() < std::f64::consts::PI * theta / 2.0) {
        failures.push(format!("|arg a| = {} is not < pi * theta*/2 = {}", a.arg().abs(), std::f64::consts::PI * theta / 2.0));
    }
    if !failures.is_empty() {
        return Err(Error::Validity(failures));
    }

    let half = (0.5 * (1.0 + rho), 0.5 * delta);
    let mut upper: Vec<(f64, f64)> = spec.lower.iter().map(|&(b, bb)| (1.0 - b, bb)).collect();
    upper.push(half);
    let mut lower = vec![(rho, delta)];
    lower.extend(spec.upper.iter().map(|&(a, aa)| (1.0 - a, aa)));
    lower.push(half);
    let mut out = HFunctionSpec::new(spec.n + 1, spec.m, upper, lower);
    out.prefactor = spec.prefactor * std::f64::consts::PI;
    out.arg_power = delta;
    out.arg_scale = a.inv();
    out.outer_power = -rho;
    Ok(out)
}
