use num_complex::Complex64;

use super::{timed, Check, Samples, VerifyOptions};
use crate::fracops::{rl_integral_with, SampledFunction};
use crate::oracle::numeric_laplace;
use crate::problem::{BoundaryTransform, GridSpec, Kind, ProblemSpec, SourceSpec, Variant};
use crate::solver::{
    fourier_kernel, solution_asymptotic_scaled, solution_series, solution_series_scaled, solve_closed_form, solve_grid,
    solve_pointwise, spectral_argument, Method,
};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Wave problem `α = μ = 2`, `ν = 1` with gaussian `f` against d'Alembert's
/// `½[f(x-t) + f(x+t)]` on an 11×11 grid.
pub fn dalembert(opts: &VerifyOptions) -> Check {
    timed("dalembert", 1e-6, opts, Some(30.0), |_| {
        let mut p = ProblemSpec::new(Kind::Wave, Variant::Quantum, 2.0, 0.0, 2.0, 1.0);
        p.f = BoundaryTransform::Gaussian { width: 0.5 };
        let grid = GridSpec::new((0..11).map(|i| -2.5 + 0.5 * i as f64).collect(), (0..11).map(|i| 0.2 + 0.2 * i as f64).collect());
        let mut s = Samples::new();
        match solve_grid(&p, &grid, Method::Auto) {
            Ok(rows) => {
                for r in rows {
                    let exact = 0.5 * (p.f.physical(r.x - r.y).unwrap_or(f64::NAN) + p.f.physical(r.x + r.y).unwrap_or(f64::NAN));
                    s.push((r.value - exact).abs(), || format!("(x,t)=({},{})", r.x, r.y));
                }
            }
            Err(e) => s.fail(e.to_string()),
        }
        s
    })
}

fn laplace_delta(mu: f64, nu: f64) -> ProblemSpec {
    let mut p = ProblemSpec::new(Kind::Laplace, Variant::Quantum, 2.0, 0.0, mu, nu);
    p.f = BoundaryTransform::Delta;
    p
}

/// Wright-series representation against the H-function closed form for
/// `|x|/y^{μ/2} <= 2`.
pub fn series_vs_closed_form(opts: &VerifyOptions) -> Check {
    timed("series_vs_closed_form", 1e-8, opts, None, |_| {
        let p = laplace_delta(1.5, 0.5);
        let mut s = Samples::new();
        for y in [0.5, 1.0, 2.0] {
            for big_x in [0.0, 0.25, 0.7, 1.3, 2.0] {
                for sign in [1.0, -1.0] {
                    let x = sign * big_x * f64::powf(y, 0.75);
                    match (solution_series(&p, x, y), solve_closed_form(&p, x, y)) {
                        (Ok(a), Ok(b)) => s.push((a - b).abs() / b.abs().max(f64::MIN_POSITIVE), || format!("(x,y)=({x:.4},{y})")),
                        (Err(e), _) | (_, Err(e)) => s.fail(format!("({x},{y}): {e}")),
                    }
                }
            }
        }
        s
    })
}

/// Asymptotic form over the series form at `|x|/y^{μ/2} = 10` (5%) and
/// `20` (2%); the reported error is the worst deviation relative to the
/// bound of its own distance, scaled to the 2% tolerance.
pub fn asymptotic_ratio(opts: &VerifyOptions) -> Check {
    timed("asymptotic_ratio", 0.02, opts, None, |tol| {
        let mut s = Samples::new();
        for mu in [1.25, 1.5] {
            let p = laplace_delta(mu, 0.5);
            for (big_x, bound) in [(10.0, 0.05), (20.0, 0.02)] {
                let y: f64 = 1.0;
                let x = big_x * y.powf(mu / 2.0);
                let a = solution_asymptotic_scaled(&p, x, y, 5.0);
                let r = solution_series_scaled(&p, x, y);
                match (a, r) {
                    (Ok(a), Ok(r)) => {
                        let dev = (a.ratio(r).re - 1.0).abs();
                        s.push(dev * tol / bound, || format!("μ={mu}, X={big_x}: ratio deviation {dev:.4}"));
                    }
                    (Err(e), _) | (_, Err(e)) => s.fail(format!("μ={mu}, X={big_x}: {e}")),
                }
            }
        }
        s
    })
}

/// Numeric Laplace transform in `y` of the Fourier kernel against the
/// transformed equation `(s^μ - Λ) N̂̂ = s^{1-ν(2-μ)} f̂ + s^{-ν(2-μ)} ĝ + Φ̂̂`.
pub fn transform_residual(opts: &VerifyOptions) -> Check {
    timed("transform_residual", 1e-6, opts, None, |_| {
        let mut a = ProblemSpec::new(Kind::Poisson, Variant::Quantum, 1.8, 0.1, 1.5, 0.5);
        a.f = BoundaryTransform::Gaussian { width: 1.0 };
        a.g = BoundaryTransform::Gaussian { width: 0.5 };
        a.source = SourceSpec::DeltaPower { beta: 0.3 };
        let mut b = ProblemSpec::new(Kind::Helmholtz, Variant::Quantum, 2.0, 0.0, 1.7, 0.2);
        b.k = 1.2;
        b.f = BoundaryTransform::Gaussian { width: 0.8 };
        b.source = SourceSpec::DeltaDelta;
        let mut cc = ProblemSpec::new(Kind::Poisson, Variant::RieszFeller, 1.5, 0.0, 1.3, 0.7);
        cc.f = BoundaryTransform::Gaussian { width: 1.0 };
        cc.source = SourceSpec::Custom(std::sync::Arc::new(|k: f64, y: f64| c((-2.0 * y - 0.5 * k * k).exp())));
        let phi_hat = |p: &ProblemSpec, k: f64, sv: Complex64| -> Complex64 {
            match p.source {
                SourceSpec::Zero => c(0.0),
                SourceSpec::DeltaDelta => c(1.0),
                SourceSpec::DeltaPower { beta } => sv.powf(beta - 1.0),
                SourceSpec::Custom(_) => (-0.5 * k * k).exp() / (sv + 2.0),
            }
        };
        let mut s = Samples::new();
        for (p, pairs) in [(&a, [(0.3, 2.0), (1.0, 3.0), (2.0, 5.0)]), (&b, [(0.0, 2.0), (0.8, 3.0), (1.5, 4.0)]), (&cc, [(0.2, 2.0), (0.6, 3.0), (1.0, 4.0)])] {
            let (mu, nu) = (p.ord.mu, p.ord.nu);
            for (k, sv) in pairs {
                let sv = c(sv);
                let lam = spectral_argument(p, k);
                let rhs = sv.powf(1.0 - nu * (2.0 - mu)) * p.f.eval(k) + sv.powf(-nu * (2.0 - mu)) * p.g.eval(k) + phi_hat(p, k, sv);
                let n = numeric_laplace(|y| fourier_kernel(p, k, y).unwrap_or(c(f64::NAN)), sv, 1e-11);
                match n {
                    Ok(n) => {
                        let res = (sv.powf(mu) - lam) * n.value - rhs;
                        s.push(res.norm() / rhs.norm(), || format!("{:?}, κ={k}, s={sv}", p.kind));
                    }
                    Err(e) => s.fail(format!("{:?}, κ={k}: {e}", p.kind)),
                }
            }
        }
        s
    })
}

/// `I^λ N(x, ·)` at small `y`, extrapolated to `y -> 0⁺` in powers of
/// `y^μ`, against the gaussian boundary datum `f(x)`.
pub fn boundary_recovery(opts: &VerifyOptions) -> Check {
    timed("boundary_recovery", 1e-3, opts, None, |_| {
        let mut p = ProblemSpec::new(Kind::Laplace, Variant::Quantum, 2.0, 0.0, 1.5, 0.5);
        p.f = BoundaryTransform::Gaussian { width: 1.0 };
        let lambda = p.lambda();
        let mu = p.ord.mu;
        let mut s = Samples::new();
        for x in [-1.5, -0.5, 0.0, 0.7, 2.0] {
            let prob = p.clone();
            let n = SampledFunction::power_singular(-lambda, move |y: f64| solve_pointwise(&prob, x, y).map(|v| v.value).unwrap_or(f64::NAN));
            let h: f64 = 0.04;
            let at = |y: f64| rl_integral_with(&n, lambda, y, 1e-7);
            match (at(h), at(0.5 * h)) {
                (Ok(v1), Ok(v2)) => {
                    let r = 2f64.powf(mu);
                    let extrap = (r * v2 - v1) / (r - 1.0);
                    let exact = p.f.physical(x).unwrap_or(f64::NAN);
                    s.push((extrap - exact).abs(), || format!("x={x}: {extrap:.6} vs {exact:.6}"));
                }
                (Err(e), _) | (_, Err(e)) => s.fail(format!("x={x}: {e}")),
            }
        }
        s
    })
}
