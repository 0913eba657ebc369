use std::f64::consts::PI;

use num_complex::Complex64;

use super::rules::{cvz, gl_adaptive, tanh_sinh};
use super::OracleValue;
use crate::error::{Error, Result};
use crate::problem::{BoundaryTransform, ProblemSpec, SourceSpec};
use crate::specfun::ml_two;

const MAX_PANELS: usize = 4000;
const CVZ_TERMS: usize = 40;

/// `∫_0^∞ κ^{ρ-1} cos(κx) h(κ) dκ`.
///
/// Panels end at the zeros of `cos(κx)`. Panel values are summed directly
/// while they are negligible within a few panels; otherwise the alternating
/// panel series is accelerated by the Cohen-Villegas-Zagier transform, with
/// the spread of two acceleration lengths as error. At `x = 0` the panels
/// grow geometrically. Fails with `SlowDecay` when panel magnitudes do not
/// decrease.
pub fn cosine_integral<H>(h: H, rho: f64, x: f64, tol: f64) -> Result<OracleValue<f64>>
where
    H: Fn(f64) -> f64,
{
    if !(x >= 0.0) || !(rho > 0.0) {
        return Err(Error::domain(format!("cosine_integral needs x >= 0 and rho > 0, got x = {x}, rho = {rho}")));
    }
    let mut g = |k: f64| Complex64::new(k.powf(rho - 1.0) * (k * x).cos() * h(k), 0.0);
    let first = if x == 0.0 { 1.0 } else { 0.5 * PI / x };
    let (v0, e0) = tanh_sinh(&mut g, 0.0, first, 1e-3 * tol);
    let mut panels = Vec::new();
    let mut err = e0;
    let mut a = first;
    for _ in 0..MAX_PANELS {
        let b = if x == 0.0 { 2.0 * a } else { a + PI / x };
        let (v, e) = gl_adaptive(&mut g, a, b, 1e-3 * tol, 20);
        panels.push(v.re);
        err += e;
        a = b;
        let n = panels.len();
        if n >= 4 && panels[n - 4..].iter().all(|p| p.abs() < 1e-3 * tol) {
            let value = v0.re + panels.iter().sum::<f64>();
            return finish(value, err, tol);
        }
        if x > 0.0 && n == CVZ_TERMS + 10 {
            let alt: Vec<Complex64> = panels.iter().enumerate().map(|(k, p)| Complex64::new(if k % 2 == 0 { *p } else { -p }, 0.0)).collect();
            let full = cvz(&alt).re;
            let short = cvz(&alt[..CVZ_TERMS - 10]).re;
            let decreasing = panels[n - 1].abs() < panels[n / 2].abs() && panels[n / 2].abs() < panels[0].abs().max(1e-300) * 1.0001;
            if !decreasing {
                return Err(Error::SlowDecay(format!("cosine panels do not decrease ({:.3e} after {n} panels)", panels[n - 1])));
            }
            return finish(v0.re + full, err + (full - short).abs(), tol);
        }
    }
    Err(Error::SlowDecay(format!("no convergence after {MAX_PANELS} panels")))
}

fn finish(value: f64, error: f64, tol: f64) -> Result<OracleValue<f64>> {
    if error <= tol {
        Ok(OracleValue { value, error })
    } else {
        Err(Error::QuadratureFailure { estimate: error, tolerance: tol })
    }
}

/// Reference value of the inversion integral `(1/2π) ∫ N̂(κ, y) e^{-iκx} dκ`
/// for problems with gaussian or zero data and no source.
///
/// The kernel is assembled here from the Mittag-Leffler function directly.
/// Its Fourier integral is truncated where the gaussian factor drops below
/// `1e-18` of the peak, then integrated by Gauss-Legendre on panels no wider
/// than a quarter period, and rerun on halved panels for the error estimate.
pub fn separation_reference(prob: &ProblemSpec, x: f64, y: f64) -> Result<OracleValue<f64>> {
    prob.validate()?;
    if !(y > 0.0) {
        return Err(Error::domain(format!("separation_reference needs y > 0, got {y}")));
    }
    let width = |b: &BoundaryTransform| match b {
        BoundaryTransform::Zero => Ok(f64::INFINITY),
        BoundaryTransform::Gaussian { width } => Ok(*width),
        other => Err(Error::SlowDecay(format!("separation_reference needs gaussian or zero data, got {other:?}"))),
    };
    let w = width(&prob.f)?.min(width(&prob.g)?);
    if !matches!(prob.source, SourceSpec::Zero) {
        return Err(Error::SlowDecay("separation_reference supports zero sources only".into()));
    }
    if w == f64::INFINITY {
        return Ok(OracleValue { value: 0.0, error: 0.0 });
    }
    let (alpha, theta, mu, nu) = (prob.sym.alpha, prob.sym.theta, prob.ord.mu, prob.ord.nu);
    let lambda = (1.0 - nu) * (2.0 - mu);
    let quantum = prob.kind.is_wave() || prob.variant == crate::problem::Variant::Quantum;
    let kernel = |kappa: f64| -> Result<Complex64> {
        let phase = kappa.signum() * theta * PI / 2.0;
        let psi = Complex64::from_polar(kappa.abs().powf(alpha), if kappa == 0.0 { 0.0 } else { phase });
        let k2 = prob.k * prob.k;
        let big_lambda = if quantum { -(psi + k2) } else { psi - k2 };
        let z = big_lambda * y.powf(mu);
        let mut v = Complex64::new(0.0, 0.0);
        if let BoundaryTransform::Gaussian { width } = prob.f {
            v += y.powf(-lambda) * ml_two(mu, 1.0 - lambda, z)? * (-0.5 * width * width * kappa * kappa).exp();
        }
        if let BoundaryTransform::Gaussian { width } = prob.g {
            v += y.powf(1.0 - lambda) * ml_two(mu, 2.0 - lambda, z)? * (-0.5 * width * width * kappa * kappa).exp();
        }
        Ok(v)
    };
    // Gaussian factor below 1e-18 (ln ≈ 41.4) plus room for kernel growth.
    let mut kmax = 83f64.sqrt() / w;
    let probe = |k: f64| -> Result<f64> { Ok(kernel(k)?.norm().max(kernel(-k)?.norm())) };
    let peak = (0..=64).map(|i| probe(kmax * i as f64 / 64.0)).collect::<Result<Vec<_>>>()?.into_iter().fold(0.0, f64::max);
    while probe(kmax)? > 1e-18 * peak.max(1e-300) {
        kmax *= 1.25;
    }
    let period = if x == 0.0 { f64::INFINITY } else { 2.0 * PI / x.abs() };
    let width_cap = (0.25 * period).min(0.05 * kmax);
    let run = |panels: usize| -> Result<f64> {
        let mut failure = None;
        let mut g = |k: f64| -> Complex64 {
            match (kernel(k), kernel(-k)) {
                (Ok(p), Ok(m)) => {
                    let e = Complex64::from_polar(1.0, -k * x);
                    p * e + m * e.conj()
                }
                (Err(e), _) | (_, Err(e)) => {
                    failure.get_or_insert(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        };
        let mut total = Complex64::new(0.0, 0.0);
        let step = kmax / panels as f64;
        for i in 0..panels {
            total += super::rules::gl_panel(&mut g, i as f64 * step, (i + 1) as f64 * step);
        }
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(total.re / (2.0 * PI))
    };
    let panels = (kmax / width_cap).ceil() as usize;
    let coarse = run(panels)?;
    let fine = run(2 * panels)?;
    let error = (fine - coarse).abs();
    if error > 1e-9 {
        return Err(Error::QuadratureFailure { estimate: error, tolerance: 1e-9 });
    }
    Ok(OracleValue { value: fine, error })
}
