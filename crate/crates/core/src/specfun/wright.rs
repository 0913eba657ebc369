//! Wright function `φ(a, b; z) = Σ z^k / (k! Γ(ak + b))` and the Fox-Wright
//! function `pΨq`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::{is_nonpositive_integer, ln_gamma, ln_rgamma, POLE_TOLERANCE};
use super::series::{log_term_error, term_from_log, SeriesConfig, SeriesValue, Summation};
use super::Scaled;
use crate::error::{Error, Result};
use crate::quad::{self, Tolerance};

/// Cancellation ratio beyond which the series result is replaced by the
/// contour integral (when that applies).
const CANCELLATION_LIMIT: f64 = 1e4;

/// Wright function `φ(a, b; z)` for `a > -1`.
pub fn wright(a: f64, b: f64, z: Complex64) -> Result<Complex64> {
    let s = wright_scaled(a, b, z)?;
    let v = s.to_complex();
    if s.value != Complex64::new(0.0, 0.0) && (v.norm() == 0.0 || !v.norm().is_finite()) {
        return Err(Error::OutOfRegime { value: s.ln_abs(), threshold: if s.ln_scale > 0.0 { 709.0 } else { -745.0 } });
    }
    Ok(v)
}

/// Wright function in scaled form, usable when the value under- or
/// overflows `f64`.
///
/// For `-1 < a < 0` and large negative real `z` the power series cancels
/// catastrophically; there the function is evaluated from the Hankel
/// integral `(1/2πi) ∫ e^{σ + zσ^{-a}} σ^{-b} dσ` along a parabola through
/// the saddle point.
pub fn wright_scaled(a: f64, b: f64, z: Complex64) -> Result<Scaled> {
    if !(a > -1.0) || !a.is_finite() {
        return Err(Error::domain(format!("Wright function needs a > -1, got {a}")));
    }
    let saddle_applies = a < 0.0 && z.re < 0.0 && z.im.abs() <= 1e-14 * z.re.abs();
    match wright_series(a, b, z, &SeriesConfig::default()) {
        Ok((v, cancellation)) if cancellation < CANCELLATION_LIMIT || !saddle_applies => {
            Ok(Scaled::unscaled(v.value))
        }
        Err(e) if !saddle_applies => Err(e),
        _ => wright_saddle(-a, b, -z.re),
    }
}

/// [`wright`] with an error bound: the series truncation bound, or the
/// relative quadrature tolerance `1e-12` on the saddle-point route.
pub fn wright_with(a: f64, b: f64, z: Complex64) -> Result<SeriesValue> {
    let s = wright_scaled(a, b, z)?;
    if s.ln_scale == 0.0 {
        if let Ok((v, _)) = wright_series(a, b, z, &SeriesConfig::default()) {
            if v.value == s.value {
                return Ok(v);
            }
        }
    }
    let value = wright(a, b, z)?;
    Ok(SeriesValue { value, trunc_bound: 1e-12 * value.norm(), terms: 0 })
}

fn wright_series(a: f64, b: f64, z: Complex64, cfg: &SeriesConfig) -> Result<(SeriesValue, f64)> {
    let mut sum = Summation::new(*cfg);
    if z.norm() == 0.0 {
        let v = ln_rgamma(b).map_or(0.0, |(l, s)| s * l.exp());
        sum.push(Complex64::new(v, 0.0), 0.0);
        return Ok((sum.finish(), 1.0));
    }
    let ln_z = z.norm().ln();
    let step = Complex64::from_polar(1.0, z.arg());
    let mut phase = Complex64::new(1.0, 0.0);
    for k in 0..cfg.max_terms {
        let kf = k as f64;
        let (term, err) = match ln_rgamma(a * kf + b) {
            None => (Complex64::new(0.0, 0.0), 0.0),
            Some((lrg, sign)) => {
                let ln_mag = kf * ln_z - ln_gamma(kf + 1.0).0 + lrg;
                let t = term_from_log(ln_mag, phase * sign)
                    .ok_or(Error::NonConvergence { what: "Wright series", terms: k })?;
                (t, log_term_error(ln_mag, 3))
            }
        };
        if sum.push(term, err) {
            return Ok((sum.finish(), sum.cancellation()));
        }
        phase *= step;
    }
    Err(Error::NonConvergence { what: "Wright series", terms: cfg.max_terms })
}

/// `φ(-ρ, b; -x)` for `0 < ρ < 1`, `x > 0` by steepest descent through the
/// real saddle of `F(σ) = σ - xσ^ρ - b ln σ`.
fn wright_saddle(rho: f64, b: f64, x: f64) -> Result<Scaled> {
    let c = saddle_point(rho, b, x);
    let ln_c = c.ln();
    let f_c = c - x * (rho * ln_c).exp() - b * ln_c;
    let k = x * (rho * ln_c).exp();
    // F(σ(u)) - F(c) written without the cancellation between terms of size c:
    // σ = c(1 + iu)^2, so σ - c = c(2iu - u^2) and σ^ρ - c^ρ = c^ρ expm1(2ρ L)
    // with L = ln(1 + iu).
    let exponent = |u: f64| -> Complex64 {
        let l = Complex64::new(0.5 * (u * u).ln_1p(), u.atan());
        Complex64::new(-c * u * u, 2.0 * c * u) - k * expm1(2.0 * rho * l) - 2.0 * b * l
    };
    let integrand = |u: f64| -> Complex64 {
        let e = exponent(u);
        Complex64::new((e.exp() * Complex64::new(1.0, u)).re, 0.0)
    };

    // Width of the Gaussian core around the saddle sets the panel scale.
    let f2 = x * rho * (1.0 - rho) * (rho * ln_c).exp() / (c * c) + b / (c * c);
    let width = if f2 > 0.0 { (1.0 / (f2 * 4.0 * c * c)).sqrt() } else { 1.0 };
    let mut breaks = vec![0.0];
    let mut u = width.min(1.0);
    loop {
        breaks.push(u);
        if exponent(u).re < -80.0 || u > 1e6 {
            break;
        }
        u *= 2.0;
    }
    let est = quad::integrate(integrand, &breaks, Tolerance::new(1e-300, 1e-12), 4000)?;
    let value = est.value.re * 2.0 * c / PI;
    if !value.is_finite() {
        return Err(Error::NonConvergence { what: "Wright saddle integral", terms: breaks.len() });
    }
    Ok(Scaled { value: Complex64::new(value, 0.0), ln_scale: f_c })
}

fn expm1(w: Complex64) -> Complex64 {
    let half = (0.5 * w.im).sin();
    Complex64::new(w.re.exp_m1() * w.im.cos() - 2.0 * half * half, w.re.exp() * w.im.sin())
}

/// Positive root of `1 - ρxσ^{ρ-1} - b/σ`, or a rough scale when none is
/// found.
fn saddle_point(rho: f64, b: f64, x: f64) -> f64 {
    let guess = (rho * x).powf(1.0 / (1.0 - rho)).max(1e-3);
    let mut s = guess;
    for _ in 0..100 {
        let g = 1.0 - rho * x * s.powf(rho - 1.0) - b / s;
        let dg = rho * (1.0 - rho) * x * s.powf(rho - 2.0) + b / (s * s);
        if dg <= 0.0 || !dg.is_finite() {
            return guess.max(1.0);
        }
        let next = s - g / dg;
        let next = if next <= 0.0 { s / 2.0 } else { next };
        if (next - s).abs() <= 1e-15 * s {
            return next;
        }
        s = next;
    }
    if s.is_finite() && s > 0.0 {
        s
    } else {
        guess.max(1.0)
    }
}

/// Parameter pairs of a Fox-Wright function
/// `pΨq[(a_i, A_i); (b_j, B_j); z] = Σ Π Γ(a_i + A_i k) / Π Γ(b_j + B_j k) z^k / k!`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoxWrightSpec {
    pub upper: Vec<(f64, f64)>,
    pub lower: Vec<(f64, f64)>,
}

impl FoxWrightSpec {
    /// `1 + Σ B_j - Σ A_i`; the series is entire when positive.
    pub fn delta(&self) -> f64 {
        1.0 + self.lower.iter().map(|p| p.1).sum::<f64>() - self.upper.iter().map(|p| p.1).sum::<f64>()
    }

    /// Radius of convergence when `delta() == 0`.
    pub fn radius(&self) -> f64 {
        let up: f64 = self.upper.iter().map(|&(_, a)| a.powf(-a)).product();
        let lo: f64 = self.lower.iter().map(|&(_, b)| b.powf(b)).product();
        up * lo
    }
}

/// Fox-Wright function by direct summation.
pub fn fox_wright(spec: &FoxWrightSpec, z: Complex64) -> Result<SeriesValue> {
    for &(a, big_a) in &spec.upper {
        if !(big_a > 0.0) {
            return Err(Error::domain(format!("Fox-Wright scale A = {big_a} must be positive")));
        }
        let _ = a;
    }
    for &(_, big_b) in &spec.lower {
        if !(big_b > 0.0) {
            return Err(Error::domain(format!("Fox-Wright scale B = {big_b} must be positive")));
        }
    }
    let delta = spec.delta();
    if delta < -1e-12 {
        return Err(Error::domain("Fox-Wright series diverges (1 + ΣB - ΣA < 0)"));
    }
    if delta.abs() <= 1e-12 && z.norm() >= spec.radius() {
        return Err(Error::domain(format!("|z| = {} outside the radius of convergence {}", z.norm(), spec.radius())));
    }
    let cfg = SeriesConfig::default();
    let mut sum = Summation::new(cfg);
    let ln_z = if z.norm() == 0.0 { f64::NEG_INFINITY } else { z.norm().ln() };
    let step = Complex64::from_polar(1.0, z.arg());
    let mut phase = Complex64::new(1.0, 0.0);
    for k in 0..cfg.max_terms {
        let kf = k as f64;
        let mut ln_mag = if k == 0 { 0.0 } else { kf * ln_z - ln_gamma(kf + 1.0).0 };
        let mut sign = 1.0;
        let mut zero = false;
        for &(a, big_a) in &spec.upper {
            let arg = a + big_a * kf;
            if is_nonpositive_integer(arg, POLE_TOLERANCE) {
                return Err(Error::domain(format!("Γ({arg}) in the numerator is infinite")));
            }
            let (l, s) = ln_gamma(arg);
            ln_mag += l;
            sign *= s;
        }
        for &(b, big_b) in &spec.lower {
            match ln_rgamma(b + big_b * kf) {
                None => zero = true,
                Some((l, s)) => {
                    ln_mag += l;
                    sign *= s;
                }
            }
        }
        let factors = spec.upper.len() + spec.lower.len() + 2;
        let (term, err) = if zero {
            (Complex64::new(0.0, 0.0), 0.0)
        } else {
            let t = term_from_log(ln_mag, phase * sign)
                .ok_or(Error::NonConvergence { what: "Fox-Wright series", terms: k })?;
            (t, log_term_error(ln_mag, factors))
        };
        if sum.push(term, err) || (k >= 1 && z.norm() == 0.0) {
            return Ok(sum.finish());
        }
        phase *= step;
    }
    Err(Error::NonConvergence { what: "Fox-Wright series", terms: cfg.max_terms })
}
