//! Weakly singular Volterra integrals `∫_0^y (y-ξ)^{μ-1} K((y-ξ)^μ) φ(ξ) dξ`.

use std::cell::RefCell;

use num_complex::Complex64;

use super::{HilferOrder, SampledFunction, Smoothness};
use crate::error::{Error, Result};
use crate::quad::{self, Tolerance};
use crate::specfun::{ml_two, rgamma};

/// Relative tolerance of the operator quadratures.
const DEFAULT_TOL: f64 = 1e-9;
/// Relative tolerance of the inner integral before differentiation.
const INNER_TOL: f64 = 1e-13;
const MAX_SEGMENTS: usize = 2000;

/// Integrand values that can fail; the first failure aborts the integral.
struct Fallible<'a> {
    f: &'a dyn Fn(f64) -> Result<f64>,
    error: RefCell<Option<Error>>,
}

impl<'a> Fallible<'a> {
    fn new(f: &'a dyn Fn(f64) -> Result<f64>) -> Self {
        Self { f, error: RefCell::new(None) }
    }

    fn call(&self, x: f64) -> f64 {
        if self.error.borrow().is_some() {
            return 0.0;
        }
        match (self.f)(x) {
            Ok(v) => v,
            Err(e) => {
                *self.error.borrow_mut() = Some(e);
                0.0
            }
        }
    }

    fn check(&self) -> Result<()> {
        match self.error.borrow_mut().take() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}

/// `∫_0^y (y-ξ)^{μ-1} K((y-ξ)^μ) φ(ξ) dξ` for `μ > 0`, where `φ(ξ) ~ ξ^lead`
/// near the origin.
///
/// The half next to `ξ = y` is integrated in `w = (y-ξ)^μ`, which absorbs
/// the kernel singularity exactly; the half next to the origin is graded
/// as `ξ = (y/2) v^{1/(1+lead)}` when `φ` is power-singular.
fn volterra(
    phi: &dyn Fn(f64) -> Result<f64>,
    lead: f64,
    mu: f64,
    y: f64,
    kernel: &dyn Fn(f64) -> Complex64,
    rel_tol: f64,
) -> Result<Complex64> {
    if !(lead > -1.0) {
        return Err(Error::domain(format!("integrand exponent {lead} at the origin is not integrable")));
    }
    let phi = Fallible::new(phi);
    let half = 0.5 * y;
    let w_end = half.powf(mu);
    let w_mid = (0.1 * y).powf(mu);
    let grade = lead != lead.round() || lead < 0.0;
    let q = if grade { 1.0 / (1.0 + lead) } else { 1.0 };

    let halves = |rel: f64| -> Result<(Complex64, Complex64, f64)> {
        let tol = Tolerance::new(1e-300, rel);
        let near = quad::integrate(|w| kernel(w) * phi.call(y - w.powf(1.0 / mu)) / mu, &[0.0, w_mid, w_end], tol, MAX_SEGMENTS);
        phi.check()?;
        let near = near?;
        let far = quad::integrate(
            |v| {
                let xi = half * v.powf(q);
                let t = y - xi;
                let jac = if grade { half * q * v.powf(q - 1.0) } else { half };
                kernel(t.powf(mu)) * t.powf(mu - 1.0) * phi.call(xi) * jac
            },
            &[0.0, 0.5, 1.0],
            tol,
            MAX_SEGMENTS,
        );
        phi.check()?;
        let far = far?;
        Ok((near.value, far.value, near.error + far.error))
    };

    let (mut near, mut far, mut err) = halves(rel_tol)?;
    let mut value = near + far;
    // The halves meet the tolerance on their own scale; when they cancel,
    // redo them on the scale of the sum.
    let ratio = value.norm() / (near.norm() + far.norm()).max(1e-300);
    if err > rel_tol * value.norm() && ratio < 0.5 {
        (near, far, err) = halves(rel_tol * ratio.max(1e-4))?;
        value = near + far;
    }
    if err > 10.0 * rel_tol * value.norm().max(1e-300) && err > 1e-15 {
        return Err(Error::QuadratureFailure { estimate: err, tolerance: rel_tol * value.norm() });
    }
    Ok(value)
}

/// Riemann-Liouville integral `(1/Γ(μ)) ∫_0^y f(ξ)(y-ξ)^{μ-1} dξ`; `μ = 0`
/// is the identity.
pub fn rl_integral(f: &SampledFunction, mu: f64, y: f64) -> Result<f64> {
    rl_integral_with(f, mu, y, DEFAULT_TOL)
}

/// [`rl_integral`] with an explicit relative tolerance.
pub fn rl_integral_with(f: &SampledFunction, mu: f64, y: f64, rel_tol: f64) -> Result<f64> {
    if !(mu >= 0.0) || !(y > 0.0) {
        return Err(Error::domain(format!("R-L integral needs mu >= 0 and y > 0, got mu={mu}, y={y}")));
    }
    if mu == 0.0 {
        return Ok(f.eval(y));
    }
    let scale = rgamma(mu);
    let kernel = |_: f64| Complex64::new(scale, 0.0);
    let phi = |x: f64| Ok(f.eval(x));
    volterra(&phi, f.exponent(), mu, y, &kernel, rel_tol).map(|v| v.re)
}

/// Prabhakar operator `∫_0^y (y-ξ)^{μ-1} E_{μ,μ}(ω(y-ξ)^μ) φ(ξ) dξ`.
pub fn prabhakar_apply(omega: Complex64, mu: f64, phi: &SampledFunction, y: f64) -> Result<Complex64> {
    if !(mu > 0.0) || !(y > 0.0) {
        return Err(Error::domain(format!("Prabhakar operator needs mu > 0 and y > 0, got mu={mu}, y={y}")));
    }
    let failure = RefCell::new(None);
    let kernel = |w: f64| match ml_two(mu, mu, omega * w) {
        Ok(v) => v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            Complex64::new(0.0, 0.0)
        }
    };
    let f = |x: f64| Ok(phi.eval(x));
    let v = volterra(&f, phi.exponent(), mu, y, &kernel, DEFAULT_TOL);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    v
}

/// Leading power of `f` at the origin: the tagged exponent, or for smooth
/// functions the order of the first non-vanishing Taylor term (capped at 4).
fn leading_exponent(f: &SampledFunction) -> f64 {
    match f.smoothness {
        Smoothness::PowerSingular { exponent } => exponent,
        Smoothness::Smooth => {
            let h = 1e-3;
            let (a, b) = (f.eval(h), f.eval(2.0 * h));
            if f.eval(0.0).abs() > 1e-12 * a.abs().max(b.abs()) && f.eval(0.0) != 0.0 {
                0.0
            } else if a == 0.0 {
                4.0
            } else {
                (b / a).abs().log2().round().clamp(0.0, 4.0)
            }
        }
    }
}

/// Hilfer-composite derivative `I^{ν(n-μ)} dⁿ/dyⁿ I^{(1-ν)(n-μ)} f` at `y`
/// with `n = 1` for `μ <= 1` and `n = 2` otherwise.
///
/// The inner integral is evaluated to near machine precision and
/// differentiated by central differences with one Richardson step. Steps
/// are `ε^{1/5}` (first derivative) and `ε^{1/6}` (second derivative)
/// times `max(1, ξ)`, capped at `ξ/4` near the origin.
pub fn hilfer_derivative(f: &SampledFunction, ord: HilferOrder, y: f64) -> Result<f64> {
    ord.validate()?;
    if !(y > 0.0) {
        return Err(Error::domain(format!("Hilfer derivative needs y > 0, got {y}")));
    }
    let n = ord.n();
    let inner = ord.inner();
    let g = |x: f64| -> Result<f64> {
        if inner == 0.0 {
            Ok(f.eval(x))
        } else {
            rl_integral_with(f, inner, x, INNER_TOL)
        }
    };
    let derivative = |x: f64| -> Result<f64> {
        let base = if n == 1 { f64::EPSILON.powf(0.2) } else { f64::EPSILON.powf(1.0 / 6.0) };
        let h = (base * x.max(1.0)).min(0.25 * x);
        if !(h > 0.0) {
            return Err(Error::DifferentiationFailure(format!("no admissible step at y = {x}")));
        }
        let diff = |h: f64| -> Result<f64> {
            if n == 1 {
                Ok((g(x + h)? - g(x - h)?) / (2.0 * h))
            } else {
                Ok((g(x + h)? - 2.0 * g(x)? + g(x - h)?) / (h * h))
            }
        };
        let coarse = diff(h)?;
        let fine = diff(0.5 * h)?;
        let v = (4.0 * fine - coarse) / 3.0;
        if !v.is_finite() {
            return Err(Error::DifferentiationFailure(format!("non-finite difference quotient at y = {x}")));
        }
        Ok(v)
    };
    let outer = ord.outer();
    if outer == 0.0 {
        return derivative(y);
    }
    let lead = leading_exponent(f) + inner - n as f64;
    if !(lead > -1.0) {
        return Err(Error::DifferentiationFailure(format!(
            "d^{n}/dy^{n} of the inner integral behaves like y^{lead} at the origin; the outer integral diverges"
        )));
    }
    let scale = rgamma(outer);
    let kernel = |_: f64| Complex64::new(scale, 0.0);
    volterra(&derivative, lead, outer, y, &kernel, 1e-8).map(|v| v.re).map_err(|e| match e {
        Error::QuadratureFailure { estimate, .. } => {
            Error::DifferentiationFailure(format!("outer integral did not converge (error estimate {estimate:e})"))
        }
        other => other,
    })
}
