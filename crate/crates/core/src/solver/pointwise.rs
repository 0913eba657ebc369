use std::cell::RefCell;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::kernel::kernel;
use crate::error::{Error, Result};
use crate::problem::{BoundaryTransform, ProblemSpec, SourceSpec};
use crate::quad::{oscillatory_half_line, Tolerance};

/// Settings of the oscillatory Fourier inversion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointwiseOptions {
    /// Relative tolerance of the inversion integral.
    pub tol: f64,
    /// Absolute floor of the tolerance.
    pub abs_tol: f64,
    pub max_panels: usize,
    /// Base width `ε` of the `exp(-εκ²)` damping applied to data whose
    /// transforms decay only algebraically. `None` rejects such data.
    pub regularization: Option<f64>,
}

impl Default for PointwiseOptions {
    fn default() -> Self {
        Self { tol: 1e-10, abs_tol: 1e-13, max_panels: 4000, regularization: None }
    }
}

/// A solution value with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointValue {
    pub value: f64,
    /// Imaginary part of the inversion integral; zero up to quadrature error
    /// for Hermitian data.
    pub imag_residual: f64,
    pub error: f64,
}

/// `N(x, y) = (1/2π) ∫ N̂(κ, y) e^{-iκx} dκ` by panel-wise quadrature of the
/// folded integrand `N̂(κ)e^{-iκx} + N̂(-κ)e^{iκx}` on `[0, ∞)`, with panel
/// width set by the zeros of `cos(κx)` and epsilon-algorithm acceleration.
pub fn solve_pointwise(prob: &ProblemSpec, x: f64, y: f64) -> Result<PointValue> {
    solve_pointwise_with(prob, x, y, &PointwiseOptions::default())
}

pub fn solve_pointwise_with(prob: &ProblemSpec, x: f64, y: f64, opts: &PointwiseOptions) -> Result<PointValue> {
    prob.validate()?;
    if !(y > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("pointwise solution needs finite x and y > 0, got ({x}, {y})")));
    }
    if pointwise_friendly(prob) {
        return invert(prob, x, y, opts, 0.0);
    }
    let Some(eps) = opts.regularization else {
        return Err(Error::SlowDecay(
            "delta data have transforms that decay only algebraically; use the closed-form path or set a regularization width".into(),
        ));
    };
    // N_ε = N + c₁ε + c₂ε² + O(ε³) for x away from the singular support, so
    // two Richardson steps over ε, ε/2, ε/4 remove the damping.
    let n1 = invert(prob, x, y, opts, eps)?;
    let n2 = invert(prob, x, y, opts, eps / 2.0)?;
    let n4 = invert(prob, x, y, opts, eps / 4.0)?;
    let r1 = 2.0 * n2.value - n1.value;
    let r2 = 2.0 * n4.value - n2.value;
    let value = (4.0 * r2 - r1) / 3.0;
    Ok(PointValue {
        value,
        imag_residual: n4.imag_residual,
        error: (value - r2).abs() + n1.error + n2.error + n4.error,
    })
}

fn invert(prob: &ProblemSpec, x: f64, y: f64, opts: &PointwiseOptions, eps: f64) -> Result<PointValue> {
    let failure = RefCell::new(None::<Error>);
    let eval = |kappa: f64| -> Complex64 {
        if failure.borrow().is_some() {
            return Complex64::new(0.0, 0.0);
        }
        let damp = if eps > 0.0 { (-eps * kappa * kappa).exp() } else { 1.0 };
        if damp == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let phase = Complex64::from_polar(1.0, -kappa * x);
        match (kernel(prob, kappa, y), kernel(prob, -kappa, y)) {
            (Ok(a), Ok(b)) => (a * phase + b * phase.conj()) * damp,
            (Err(e), _) | (_, Err(e)) => {
                *failure.borrow_mut() = Some(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let half_period = if x == 0.0 { 2.0 } else { (PI / x.abs()).min(2.0) };
    let tol = Tolerance::new(opts.abs_tol, opts.tol);
    let result = oscillatory_half_line(eval, half_period, half_period, tol, opts.max_panels);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let est = result?;
    let scale = 1.0 / (2.0 * PI);
    Ok(PointValue { value: est.value.re * scale, imag_residual: est.value.im * scale, error: est.error * scale })
}

/// Whether the problem's data are all rapidly decaying in Fourier space.
pub(crate) fn pointwise_friendly(prob: &ProblemSpec) -> bool {
    let fine = |b: &BoundaryTransform| b.decays_rapidly() || matches!(b, BoundaryTransform::Custom(_));
    fine(&prob.f) && fine(&prob.g) && matches!(prob.source, SourceSpec::Zero | SourceSpec::Custom(_))
}
