//! Mittag-Leffler functions: one, two, three (Prabhakar) and four parameter
//! forms.
//!
//! Small and moderate arguments are summed directly. Large arguments away
//! from the positive real axis suffer catastrophic cancellation in the power
//! series, so those are evaluated from the Hankel-contour representation
//!
//! ```text
//! E_{α,β}(z) = (1/α) Σ_j s_j^{1-β} e^{s_j}
//!            + (1/2πi) ∫_0^∞ e^{-r} r^{α-β} [ e^{-iπ(α-β)}/(r^α e^{-iπα} - z)
//!                                        - e^{iπ(α-β)}/(r^α e^{iπα} - z) ] dr
//! ```
//!
//! where `s_j = |z|^{1/α} e^{i(arg z + 2πj)/α}` runs over the poles with
//! `|arg z + 2πj| < απ`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{ln_gamma, ln_pochhammer, ln_rgamma, rgamma};
use super::series::{log_term_error, term_from_log, SeriesConfig, SeriesValue, Summation};
use crate::error::{Error, Result};
use crate::quad::{self, Tolerance};

/// Parameters selecting a member of the Mittag-Leffler family
/// `E^{γ,κ}_{α,β}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MLParams {
    pub alpha: f64,
    pub beta: f64,
    #[serde(default = "one")]
    pub gamma: f64,
    #[serde(default = "one")]
    pub kappa_ml: f64,
}

fn one() -> f64 {
    1.0
}

impl MLParams {
    pub fn two(alpha: f64, beta: f64) -> Self {
        Self { alpha, beta, gamma: 1.0, kappa_ml: 1.0 }
    }

    pub fn three(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self { alpha, beta, gamma, kappa_ml: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) {
            return Err(Error::domain(format!("alpha must be positive, got {}", self.alpha)));
        }
        if !(self.kappa_ml > 0.0) {
            return Err(Error::domain(format!("kappa_ml must be positive, got {}", self.kappa_ml)));
        }
        if self.alpha <= self.kappa_ml - 1.0 {
            return Err(Error::domain(format!(
                "alpha = {} must exceed kappa_ml - 1 = {}",
                self.alpha,
                self.kappa_ml - 1.0
            )));
        }
        Ok(())
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("alpha must be positive, got {alpha}")))
    }
}

/// One-parameter Mittag-Leffler function `E_α(z)`.
pub fn ml_one(alpha: f64, z: Complex64) -> Result<Complex64> {
    ml_two(alpha, 1.0, z)
}

/// Two-parameter Mittag-Leffler function `E_{α,β}(z) = Σ z^k / Γ(αk+β)`.
pub fn ml_two(alpha: f64, beta: f64, z: Complex64) -> Result<Complex64> {
    ml_two_with(alpha, beta, z, &SeriesConfig::default()).map(|v| v.value)
}

/// [`ml_two`] with explicit settings, reporting the truncation bound.
///
/// For `0 < α <= 2`, `α != 1`, the large-argument path is used when `|z|`
/// exceeds the configured radius or, by default, when the power series
/// would lose more than about `e^6` to cancellation.
pub fn ml_two_with(alpha: f64, beta: f64, z: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    check_alpha(alpha)?;
    if z.norm() == 0.0 {
        return Ok(SeriesValue { value: Complex64::new(rgamma(beta), 0.0), trunc_bound: 0.0, terms: 1 });
    }
    if cfg.elementary_shortcuts && alpha == 1.0 && beta == 1.0 {
        return Ok(SeriesValue { value: z.exp(), trunc_bound: 4.0 * f64::EPSILON * z.exp().norm(), terms: 0 });
    }
    if cfg.elementary_shortcuts && alpha == 2.0 && (beta == 1.0 || beta == 2.0) {
        // E_{2,1}(z) = cosh √z and E_{2,2}(z) = sinh √z / √z.
        let r = z.sqrt();
        let value = if beta == 1.0 { r.cosh() } else { r.sinh() / r };
        return Ok(SeriesValue { value, trunc_bound: 8.0 * f64::EPSILON * value.norm().max(1.0), terms: 0 });
    }
    if use_large_argument(alpha, z, cfg) {
        if let Ok(v) = ml_hankel(alpha, beta, z) {
            return Ok(v);
        }
    }
    ml_series(alpha, beta, z, cfg)
}

fn use_large_argument(alpha: f64, z: Complex64, cfg: &SeriesConfig) -> bool {
    // The representation is used for 0 < α <= 2 only, and not at α = 1 or
    // where a pole sits on the cut (|arg z| = απ).
    if alpha > 2.0 || (alpha - 1.0).abs() < 1e-12 || (z.arg().abs() - alpha * PI).abs() < 1e-3 {
        return false;
    }
    match cfg.large_argument_radius {
        Some(r) => z.norm() > r,
        None => {
            // log of (largest term)/(result) for the power series
            // The result grows like the largest principal-sheet pole
            // exponential, or is algebraic when no pole lies there.
            let w = z.norm().powf(1.0 / alpha);
            let growth = (-2..=2)
                .map(|j| z.arg() + 2.0 * PI * j as f64)
                .filter(|theta| theta.abs() < alpha * PI)
                .map(|theta| w * (theta / alpha).cos())
                .fold(0.0, f64::max);
            w - growth > 6.0
        }
    }
}

fn ml_series(alpha: f64, beta: f64, z: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    let mut sum = Summation::new(*cfg);
    let ln_z = z.norm().ln();
    let phase_step = Complex64::from_polar(1.0, z.arg());
    let mut phase = Complex64::new(1.0, 0.0);
    for k in 0..cfg.max_terms {
        let kf = k as f64;
        let term = match ln_rgamma(alpha * kf + beta) {
            None => Complex64::new(0.0, 0.0),
            Some((lrg, sign)) => {
                let ln_mag = kf * ln_z + lrg;
                let t = term_from_log(ln_mag, phase * sign)
                    .ok_or(Error::NonConvergence { what: "Mittag-Leffler series", terms: k })?;
                if sum.push(t, log_term_error(ln_mag, 2) + kf * f64::EPSILON) {
                    return Ok(sum.finish());
                }
                phase *= phase_step;
                continue;
            }
        };
        if sum.push(term, 0.0) {
            return Ok(sum.finish());
        }
        phase *= phase_step;
    }
    Err(Error::NonConvergence { what: "Mittag-Leffler series", terms: cfg.max_terms })
}

/// Large-argument evaluation from the Hankel contour: residues at the
/// principal-sheet poles plus the branch-cut integral.
fn ml_hankel(alpha: f64, beta: f64, z: Complex64) -> Result<SeriesValue> {
    // The cut integral needs β < 1 + α; shift down with
    // E_{α,β}(z) = (E_{α,β-α}(z) - 1/Γ(β-α)) / z.
    if beta >= 1.0 + alpha {
        let lower = ml_hankel(alpha, beta - alpha, z)?;
        let value = (lower.value - rgamma(beta - alpha)) / z;
        return Ok(SeriesValue {
            value,
            trunc_bound: lower.trunc_bound / z.norm() + 4.0 * f64::EPSILON * value.norm(),
            terms: lower.terms,
        });
    }

    let modulus = z.norm();
    let root = modulus.powf(1.0 / alpha);
    let mut residues = Complex64::new(0.0, 0.0);
    let jmax = (alpha / 2.0).ceil() as i64 + 1;
    for j in -jmax..=jmax {
        let theta = z.arg() + 2.0 * PI * j as f64;
        if theta.abs() < alpha * PI {
            let s = Complex64::from_polar(root, theta / alpha);
            let pow = Complex64::from_polar(root.powf(1.0 - beta), (1.0 - beta) * theta / alpha);
            residues += pow * s.exp() / alpha;
        }
    }

    let e_minus = Complex64::from_polar(1.0, -PI * (alpha - beta));
    let e_plus = Complex64::from_polar(1.0, PI * (alpha - beta));
    let rot_minus = Complex64::from_polar(1.0, -PI * alpha);
    let rot_plus = Complex64::from_polar(1.0, PI * alpha);
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);

    // r = t^q removes the r^{α-β} endpoint singularity when α - β < 0.
    let q = if alpha - beta < 0.0 { 1.0 / (1.0 + alpha - beta) } else { 1.0 };
    // After substitution r^{α-β} dr = q dt exactly.
    let kernel = |t: f64| -> Complex64 {
        let r = t.powf(q);
        let weight = if q == 1.0 { (-r).exp() * r.powf(alpha - beta) } else { (-r).exp() * q };
        let ra = r.powf(alpha);
        let bracket = e_minus / (ra * rot_minus - z) - e_plus / (ra * rot_plus - z);
        bracket * weight / two_pi_i
    };
    let r_max: f64 = 60.0 + 2.0 * (alpha - beta).abs();
    let mut breaks = vec![0.0];
    for &r in &[0.5, 2.0, 8.0, 20.0] {
        breaks.push(r);
    }
    if root > 0.0 && root < r_max {
        breaks.push(root);
    }
    breaks.push(r_max);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let t_breaks: Vec<f64> = breaks.iter().map(|r| r.powf(1.0 / q)).collect();
    let scale = residues.norm().max(1.0 / modulus);
    let est = quad::integrate(kernel, &t_breaks, Tolerance::new(1e-16 * scale, 1e-14), 2000)?;
    let value = residues + est.value;
    Ok(SeriesValue {
        value,
        trunc_bound: est.error + 8.0 * f64::EPSILON * (residues.norm() + value.norm()),
        terms: 0,
    })
}

/// Leading terms of the algebraic large-argument expansion
/// `-Σ_{k=1..K} z^{-k} / Γ(β - αk)`, valid for `0 < α < 2` away from the
/// growth sector. Exposed for comparison; [`ml_two`] uses the exact
/// Hankel-contour path instead.
pub fn ml_algebraic_asymptotic(alpha: f64, beta: f64, z: Complex64, terms: usize) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let inv = z.inv();
    let mut p = inv;
    for k in 1..=terms {
        sum -= p * rgamma(beta - alpha * k as f64);
        p *= inv;
    }
    sum
}

/// Three-parameter (Prabhakar) function `Σ (γ)_k z^k / (Γ(αk+β) k!)`.
pub fn ml_three(alpha: f64, beta: f64, gamma: f64, z: Complex64) -> Result<Complex64> {
    ml_four(MLParams::three(alpha, beta, gamma), z)
}

/// Four-parameter function `Σ (γ)_{κn} z^n / (Γ(αn+β) n!)`.
pub fn ml_four(params: MLParams, z: Complex64) -> Result<Complex64> {
    ml_four_with(params, z, &SeriesConfig::default()).map(|v| v.value)
}

pub fn ml_four_with(params: MLParams, z: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    params.validate()?;
    let MLParams { alpha, beta, gamma, kappa_ml } = params;
    if gamma == 1.0 && kappa_ml == 1.0 {
        // (1)_n = n!, so this is E_{α,β}, which has a large-argument path.
        return ml_two_with(alpha, beta, z, cfg);
    }
    let mut sum = Summation::new(*cfg);
    let ln_z = if z.norm() == 0.0 { f64::NEG_INFINITY } else { z.norm().ln() };
    let phase_step = Complex64::from_polar(1.0, z.arg());
    let mut phase = Complex64::new(1.0, 0.0);
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        let poch = ln_pochhammer(gamma, kappa_ml * nf).map_err(Error::Domain)?;
        let term = match (poch, ln_rgamma(alpha * nf + beta)) {
            (Some((lp, sp)), Some((lrg, sg))) => {
                let ln_mag = if n == 0 { lp + lrg } else { lp + lrg + nf * ln_z - ln_gamma(nf + 1.0).0 };
                let t = term_from_log(ln_mag, phase * (sp * sg))
                    .ok_or(Error::NonConvergence { what: "Prabhakar series", terms: n })?;
                (t, log_term_error(ln_mag, 4))
            }
            _ => (Complex64::new(0.0, 0.0), 0.0),
        };
        if sum.push(term.0, term.1) {
            return Ok(sum.finish());
        }
        if z.norm() == 0.0 && n >= 1 {
            return Ok(sum.finish());
        }
        phase *= phase_step;
    }
    Err(Error::NonConvergence { what: "Prabhakar series", terms: cfg.max_terms })
}
