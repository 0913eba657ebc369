use std::f64::consts::PI;

use num_complex::Complex64;

use super::rules::{gl_adaptive, tanh_sinh};
use super::OracleValue;
use crate::error::{Error, Result};

/// `∫_0^∞ e^{-sy} f(y) dy`.
///
/// The half line is cut into panels `[0, 1], [1, 2], [2, 4], …`; the first
/// uses tanh-sinh (integrable singularities at `y = 0` are allowed), the
/// rest adaptive Gauss-Legendre. The cutoff `Y` is the first panel end with
/// `e^{-Re(s) Y} max|f| < 0.1 tol` on the last panel, and that bound is
/// added to the reported error. `Re(s)` must exceed the growth rate of `f`.
pub fn numeric_laplace<F>(f: F, s: Complex64, tol: f64) -> Result<OracleValue>
where
    F: Fn(f64) -> Complex64,
{
    if !(s.re > 0.0) {
        return Err(Error::domain(format!("numeric_laplace needs Re(s) > 0, got {s}")));
    }
    let mut g = |y: f64| (-s * y).exp() * f(y);
    let (mut total, mut err) = tanh_sinh(&mut g, 0.0, 1.0, 0.01 * tol);
    let (mut a, mut b) = (1.0, 2.0);
    let y_cap = 1.0 + 800.0 / s.re;
    let mut growing = 0;
    let mut last_tail = f64::INFINITY;
    loop {
        let sup = (0..=16).map(|i| f(a + (b - a) * i as f64 / 16.0).norm()).fold(0.0, f64::max);
        let tail = (-s.re * a).exp() * sup / s.re;
        growing = if tail >= last_tail { growing + 1 } else { 0 };
        last_tail = tail;
        if growing >= 3 || b > y_cap || !tail.is_finite() {
            return Err(Error::TailDominance { bound: tail, tolerance: tol });
        }
        let (v, e) = gl_adaptive(&mut g, a, b, 0.01 * tol, 30);
        total += v;
        err += e;
        if (-s.re * b).exp() * sup / s.re < 0.1 * tol {
            err += (-s.re * b).exp() * sup / s.re;
            break;
        }
        a = b;
        b *= 2.0;
    }
    if !(err <= tol) {
        return Err(Error::QuadratureFailure { estimate: err, tolerance: tol });
    }
    Ok(OracleValue { value: total, error: err })
}

/// Contour parameters of the inverse-Laplace oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseLaplaceOptions {
    /// Trapezoid nodes on the contour; the error estimate reruns with twice
    /// as many.
    pub nodes: usize,
    /// Horizontal shift of the contour, to the right of every singularity
    /// not on the negative real axis.
    pub shift: f64,
    pub tol: f64,
}

impl Default for InverseLaplaceOptions {
    fn default() -> Self {
        Self { nodes: 48, shift: 0.0, tol: 1e-6 }
    }
}

/// Bromwich inversion `f(y) = (1/2πi) ∫ e^{sy} F(s) ds` on the cotangent
/// contour `s(θ) = σ + (N/y)(-0.6122 + 0.5017 θ cot(0.6407 θ) + 0.2645 i θ)`,
/// `-π < θ < π`, by the midpoint rule in `θ`.
pub fn numeric_inverse_laplace<F>(big_f: F, y: f64, opts: &InverseLaplaceOptions) -> Result<OracleValue>
where
    F: Fn(Complex64) -> Complex64,
{
    if !(y > 0.0) {
        return Err(Error::domain(format!("numeric_inverse_laplace needs y > 0, got {y}")));
    }
    let coarse = cotangent_rule(&big_f, y, opts.nodes, opts.shift);
    let fine = cotangent_rule(&big_f, y, 2 * opts.nodes, opts.shift);
    let error = (fine - coarse).norm();
    if !(error <= opts.tol) {
        return Err(Error::ContourFailure { estimate: error, tolerance: opts.tol });
    }
    Ok(OracleValue { value: fine, error })
}

fn cotangent_rule<F: Fn(Complex64) -> Complex64>(big_f: &F, y: f64, n: usize, shift: f64) -> Complex64 {
    let (a, b, c, d) = (-0.6122, 0.5017, 0.6407, 0.2645);
    let scale = n as f64 / y;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let theta = -PI + (k as f64 + 0.5) * 2.0 * PI / n as f64;
        let (sn, cs) = (c * theta).sin_cos();
        let cot = cs / sn;
        let s = Complex64::new(shift + scale * (a + b * theta * cot), scale * d * theta);
        let ds = Complex64::new(scale * (b * cot - b * c * theta / (sn * sn)), scale * d);
        sum += (s * y).exp() * big_f(s) * ds;
    }
    // (1/2πi) · (2π/n) · Σ
    sum / Complex64::new(0.0, n as f64)
}
