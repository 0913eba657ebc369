use num_complex::Complex64;

use super::spec::HFunctionSpec;
use super::spec::h_reduce;
use crate::error::{Error, Result};
use crate::specfun::gamma::{is_nonpositive_integer, ln_gamma, ln_rgamma, POLE_TOLERANCE};
use crate::specfun::{log_term_error, term_from_log, wright_scaled, Scaled, SeriesConfig, SeriesValue, Summation};

/// Poles of different Gamma factors closer than this are treated as
/// coincident.
const COINCIDENCE_TOLERANCE: f64 = 1e-9;

/// Residue series of the H-function at the physical argument `x`.
pub fn h_series(spec: &HFunctionSpec, x: Complex64) -> Result<Complex64> {
    h_series_with(spec, x, &SeriesConfig::default()).map(|v| v.value)
}

/// [`h_series`] with explicit truncation settings.
///
/// Sums the residues at the poles `s = -(b_h + k)/B_h` of the first `m`
/// lower Gamma factors. Each pole family is truncated by the shared series
/// rule.
pub fn h_series_with(spec: &HFunctionSpec, x: Complex64, cfg: &SeriesConfig) -> Result<SeriesValue> {
    spec.validate()?;
    let z = spec.argument(x);
    let mstar = spec.m_star();
    if mstar < -1e-12 {
        return Err(Error::NonConvergence { what: "H-function residue series (Σ B - Σ A < 0)", terms: 0 });
    }
    if mstar.abs() <= 1e-12 && z.norm() >= spec.balance_radius() {
        return Err(Error::NonConvergence { what: "H-function residue series (outside radius)", terms: 0 });
    }
    let outer = spec.outer_factor(x);
    if z.norm() == 0.0 {
        return zero_argument(spec, outer);
    }

    let ln_z = z.norm().ln();
    let arg_z = z.arg();
    let mut total = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    let mut terms = 0;
    for h in 0..spec.m {
        let (bh, big_bh) = spec.lower[h];
        let mut sum = Summation::new(*cfg);
        let mut converged = false;
        for k in 0..cfg.max_terms {
            let kf = k as f64;
            let s = (bh + kf) / big_bh;
            let (term, err) = match residue(spec, h, s, kf)? {
                None => (Complex64::new(0.0, 0.0), 0.0),
                Some((ln_mag, sign)) => {
                    let ln_mag = ln_mag + s * ln_z;
                    let phase = Complex64::from_polar(sign, s * arg_z);
                    let t = term_from_log(ln_mag, phase)
                        .ok_or(Error::NonConvergence { what: "H-function residue series", terms: k })?;
                    (t, log_term_error(ln_mag, spec.p + spec.q + 2))
                }
            };
            if sum.push(term, err) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence { what: "H-function residue series", terms: cfg.max_terms });
        }
        let v = sum.finish();
        total += v.value;
        bound += v.trunc_bound;
        terms += v.terms;
    }
    Ok(SeriesValue { value: outer * total, trunc_bound: outer.norm() * bound, terms })
}

/// Log-magnitude and sign of the Gamma ratio times `(-1)^k / (k! B_h)` at
/// the pole `s`; `None` when a denominator Gamma is infinite.
fn residue(spec: &HFunctionSpec, h: usize, s: f64, k: f64) -> Result<Option<(f64, f64)>> {
    let mut ln = -ln_gamma(k + 1.0).0 - spec.lower[h].1.ln();
    let mut sign = if (k as u64).is_multiple_of(2) { 1.0 } else { -1.0 };
    for (j, &(b, big_b)) in spec.lower.iter().enumerate() {
        if j == h {
            continue;
        }
        if j < spec.m {
            let arg = b - big_b * s;
            if is_nonpositive_integer(arg, COINCIDENCE_TOLERANCE) {
                return Err(Error::CoincidentPoles { pole: -s });
            }
            let (l, sg) = ln_gamma(arg);
            ln += l;
            sign *= sg;
        } else {
            match ln_rgamma(1.0 - b + big_b * s) {
                None => return Ok(None),
                Some((l, sg)) => {
                    ln += l;
                    sign *= sg;
                }
            }
        }
    }
    for (j, &(a, big_a)) in spec.upper.iter().enumerate() {
        if j < spec.n {
            let arg = 1.0 - a + big_a * s;
            if is_nonpositive_integer(arg, POLE_TOLERANCE) {
                return Err(Error::domain(format!(
                    "poles of Γ(1 - a_{} - A_{} s) and Γ(b_{} + B_{} s) overlap",
                    j + 1,
                    j + 1,
                    h + 1,
                    h + 1
                )));
            }
            let (l, sg) = ln_gamma(arg);
            ln += l;
            sign *= sg;
        } else {
            match ln_rgamma(a - big_a * s) {
                None => return Ok(None),
                Some((l, sg)) => {
                    ln += l;
                    sign *= sg;
                }
            }
        }
    }
    Ok(Some((ln, sign)))
}

/// Limit at zero argument: zero when every leading exponent `b_h/B_h` is
/// positive, the `k = 0` residue when one vanishes.
fn zero_argument(spec: &HFunctionSpec, outer: Complex64) -> Result<SeriesValue> {
    let mut value = Complex64::new(0.0, 0.0);
    for h in 0..spec.m {
        let (bh, big_bh) = spec.lower[h];
        let s = bh / big_bh;
        if s < 0.0 {
            return Err(Error::domain("H-function is unbounded at zero argument (b_h/B_h < 0)"));
        }
        if s == 0.0 {
            if let Some((ln, sign)) = residue(spec, h, 0.0, 0.0)? {
                value += sign * ln.exp();
            }
        }
    }
    Ok(SeriesValue { value: outer * value, trunc_bound: 0.0, terms: 1 })
}

/// Evaluates the H-function by the most reliable available route.
///
/// Cancelling Gamma pairs are removed first. `H_{1,1}^{1,0}` at a positive
/// real argument is computed through the Wright function (which stays
/// accurate where the residue series cancels); everything else uses the
/// residue series.
pub fn h_eval(spec: &HFunctionSpec, x: Complex64) -> Result<Complex64> {
    let s = h_eval_scaled(spec, x)?;
    let v = s.to_complex();
    if s.value.norm() != 0.0 && (v.norm() == 0.0 || !v.norm().is_finite()) {
        return Err(Error::OutOfRegime { value: s.ln_abs(), threshold: if s.ln_scale > 0.0 { 709.0 } else { -745.0 } });
    }
    Ok(v)
}

/// [`h_eval`] in scaled form for values outside the `f64` range.
pub fn h_eval_scaled(spec: &HFunctionSpec, x: Complex64) -> Result<Scaled> {
    let reduced = h_reduce(spec);
    reduced.validate()?;
    let z = reduced.argument(x);
    if (reduced.m, reduced.n, reduced.p, reduced.q) == (1, 0, 1, 1) && z.im == 0.0 && z.re > 0.0 {
        let (a, big_a) = reduced.upper[0];
        let (b, big_b) = reduced.lower[0];
        if big_a < big_b {
            let w = wright_scaled(-big_a / big_b, a - big_a * b / big_b, Complex64::new(-z.re.powf(1.0 / big_b), 0.0))?;
            let ln_pre = (b / big_b) * z.re.ln() - big_b.ln();
            return Ok(w.scale(reduced.outer_factor(x), ln_pre));
        }
    }
    h_series(&reduced, x).map(Scaled::unscaled)
}
