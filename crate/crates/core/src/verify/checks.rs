use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{timed, Check, Samples, VerifyOptions};
use crate::foxh::{h_reduce, h_series, mellin_cosine_map, ml_as_h};
use crate::fracops::{lemma1_kernel, prabhakar_apply, rl_integral, Branch, HilferOrder, SampledFunction};
use crate::oracle::{cosine_integral, numeric_inverse_laplace, numeric_laplace, InverseLaplaceOptions};
use crate::specfun::{gamma, ml_two, ml_two_with, SeriesConfig};

pub use super::solutions::{
    asymptotic_ratio, boundary_recovery, dalembert, series_vs_closed_form, transform_residual,
};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Relative error with a unit floor on the reference, so that sign changes
/// of oscillating references do not inflate it.
fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Mittag-Leffler reductions to exp, cos, cosh and sin(z)/z on 40 seeded
/// points, with the closed-form shortcuts switched off so that the series
/// and contour paths are the ones tested.
pub fn ml_identities(opts: &VerifyOptions) -> Check {
    timed("ml_identities", 1e-10, opts, Some(1.0), |_| {
        let cfg = SeriesConfig { elementary_shortcuts: false, ..Default::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut s = Samples::new();
        let ml = |a: f64, b: f64, z: f64| ml_two_with(a, b, c(z), &cfg).map(|v| v.value);
        for _ in 0..10 {
            let z: f64 = rng.gen_range(-6.0..6.0);
            let r = ml(1.0, 1.0, z).map(|v| rel(v, c(z.exp())));
            s.push(r.unwrap_or(f64::NAN), || format!("exp({z})"));
            let z: f64 = rng.gen_range(0.0..10.0);
            let r = ml(2.0, 1.0, -z * z).map(|v| rel(v, c(z.cos())));
            s.push(r.unwrap_or(f64::NAN), || format!("cos({z})"));
            let z: f64 = rng.gen_range(0.0..6.0);
            let r = ml(2.0, 1.0, z * z).map(|v| rel(v, c(z.cosh())));
            s.push(r.unwrap_or(f64::NAN), || format!("cosh({z})"));
            let z: f64 = rng.gen_range(0.05..10.0);
            let r = ml(2.0, 2.0, -z * z).map(|v| rel(v, c(z.sin() / z)));
            s.push(r.unwrap_or(f64::NAN), || format!("sinc({z})"));
        }
        s
    })
}

/// Numeric Laplace transform of `t^{β-1} E_{α,β}(a t^α)` against
/// `s^{α-β}/(s^α - a)`.
pub fn laplace_pairs(opts: &VerifyOptions) -> Check {
    timed("laplace_pairs", 1e-6, opts, Some(10.0), |_| {
        let mut s = Samples::new();
        for (alpha, beta, a) in [(1.5, 1.0, 0.8), (1.25, 0.75, -0.5), (1.9, 1.6, 1.0)] {
            for sv in [2.0, 3.0, 5.0] {
                let f = move |t: f64| t.powf(beta - 1.0) * ml_two(alpha, beta, c(a * t.powf(alpha))).unwrap_or(c(f64::NAN));
                let exact = c(sv).powf(alpha - beta) / (c(sv).powf(alpha) - a);
                match numeric_laplace(f, c(sv), 1e-10) {
                    Ok(v) => s.push((v.value - exact).norm() / exact.norm(), || format!("(α,β,a)=({alpha},{beta},{a}), s={sv}")),
                    Err(e) => s.fail(format!("({alpha},{beta},{a}), s={sv}: {e}")),
                }
            }
        }
        s
    })
}

/// Inversion kernels against contour inversion of `s^{ς-ν(2-μ)}/(s^μ ± r̂)`.
pub fn kernel_inversion(opts: &VerifyOptions) -> Check {
    timed("kernel_inversion", 1e-5, opts, None, |_| {
        let mut s = Samples::new();
        let varsigma = 0.5;
        for mu in [1.25, 1.5, 1.9] {
            for nu in [0.0, 0.5, 1.0] {
                let ord = HilferOrder { mu, nu };
                let e = varsigma - nu * (2.0 - mu);
                for y in [0.5, 1.0, 2.0] {
                    for (branch, rhat, sign) in [(Branch::Plus, 1.0, 1.0), (Branch::Minus, 0.5, -1.0)] {
                        let kernel = lemma1_kernel(ord, varsigma, c(rhat), y, branch);
                        let inv = numeric_inverse_laplace(
                            |z: Complex64| z.powf(e) / (z.powf(mu) + sign * rhat),
                            y,
                            &InverseLaplaceOptions::default(),
                        );
                        match (kernel, inv) {
                            (Ok(k), Ok(v)) => s.push((k - v.value).norm(), || format!("μ={mu}, ν={nu}, y={y}, {branch:?}")),
                            (Err(err), _) | (_, Err(err)) => s.fail(format!("μ={mu}, ν={nu}, y={y}: {err}")),
                        }
                    }
                }
            }
        }
        s
    })
}

/// The ω = 0 Prabhakar operator against the Riemann-Liouville integral, and
/// the delta-power source term against Prabhakar quadrature.
pub fn prabhakar_convolution(opts: &VerifyOptions) -> [Check; 2] {
    let rl = timed("prabhakar_rl_limit", 1e-8, opts, None, |_| {
        // Each entry: test function, and its exact R-L integral of order μ.
        type Exact = fn(f64, f64) -> f64;
        let phis: [(&str, SampledFunction, Exact); 3] = [
            ("cos(y/2)+y", SampledFunction::smooth(|y: f64| (0.5 * y).cos() + y), |mu, y| {
                y.powf(mu) * ml_two(2.0, mu + 1.0, c(-0.25 * y * y)).map(|v| v.re).unwrap_or(f64::NAN)
                    + y.powf(1.0 + mu) / gamma(2.0 + mu)
            }),
            ("exp(-y)", SampledFunction::smooth(|y: f64| (-y).exp()), |mu, y| {
                y.powf(mu) * ml_two(1.0, mu + 1.0, c(-y)).map(|v| v.re).unwrap_or(f64::NAN)
            }),
            ("y^-0.4", SampledFunction::power_singular(-0.4, |y: f64| y.powf(-0.4)), |mu, y| {
                gamma(0.6) / gamma(0.6 + mu) * y.powf(mu - 0.4)
            }),
        ];
        let mut s = Samples::new();
        for (name, phi, exact) in &phis {
            for mu in [1.25, 1.5, 2.0] {
                for y in [0.7, 1.9] {
                    match (prabhakar_apply(c(0.0), mu, phi, y), rl_integral(phi, mu, y)) {
                        (Ok(p), Ok(r)) => {
                            let e = exact(mu, y);
                            let err = ((p.re - r).abs() + p.im.abs()).max((r - e).abs() / e.abs().max(1.0));
                            s.push(err, || format!("{name}, μ={mu}, y={y}"))
                        }
                        (Err(e), _) | (_, Err(e)) => s.fail(format!("{name}, μ={mu}, y={y}: {e}")),
                    }
                }
            }
        }
        s
    });
    let dp = timed("delta_power_convolution", 1e-6, opts, None, |_| {
        let mut s = Samples::new();
        for beta in [0.3, -0.5] {
            let g = gamma(1.0 - beta);
            let phi = if beta > 0.0 {
                SampledFunction::power_singular(-beta, move |y: f64| y.powf(-beta) / g)
            } else {
                SampledFunction::smooth(move |y: f64| y.powf(-beta) / g)
            };
            for mu in [1.5, 1.8] {
                for omega in [-1.0, -2.5] {
                    for y in [0.5f64, 1.5] {
                        let closed = ml_two(mu, mu - beta + 1.0, c(omega * y.powf(mu))).map(|e| y.powf(mu - beta) * e);
                        match (prabhakar_apply(c(omega), mu, &phi, y), closed) {
                            (Ok(p), Ok(e)) => s.push((p - e).norm(), || format!("β={beta}, μ={mu}, ω={omega}, y={y}")),
                            (Err(err), _) | (_, Err(err)) => s.fail(format!("β={beta}, μ={mu}: {err}")),
                        }
                    }
                }
            }
        }
        s
    });
    [rl, dp]
}

/// Residue series of the H-function form of `E_{α,β}` against the
/// Mittag-Leffler evaluator on seeded points with `|z| <= 3`.
pub fn hml_equivalence(opts: &VerifyOptions) -> Check {
    timed("hml_equivalence", 1e-8, opts, None, |_| {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
        let mut s = Samples::new();
        let pairs = [(0.6, 1.0), (1.0, 1.0), (1.25, 0.75), (1.5, 1.0), (1.5, 2.0), (1.9, 0.5)];
        let zs: Vec<Complex64> = (0..8)
            .map(|_| Complex64::from_polar(rng.gen_range(0.1..3.0), rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)))
            .collect();
        for (alpha, beta) in pairs {
            let spec = ml_as_h(alpha, beta);
            for &z in &zs {
                match (h_series(&spec, z), ml_two(alpha, beta, z)) {
                    (Ok(h), Ok(e)) => s.push((h - e).norm() / e.norm(), || format!("α={alpha}, β={beta}, z={z:.4}")),
                    (Err(err), _) | (_, Err(err)) => s.fail(format!("α={alpha}, β={beta}, z={z}: {err}")),
                }
            }
        }
        s
    })
}

/// Cosine transform of `E_{μ,1-λ}(-y^μ κ^α)` by the oracle against the
/// Mellin-cosine H-function evaluated by its residue series.
pub fn cosine_h(opts: &VerifyOptions) -> Check {
    timed("cosine_h", 1e-4, opts, None, |_| {
        let (mu, nu, alpha, y) = (1.5, 0.5, 2.0, 1.0);
        let b = 1.0 - (1.0 - nu) * (2.0 - mu);
        let mut s = Samples::new();
        for x in [0.5, 1.0, 2.0] {
            let h = move |k: f64| ml_two(mu, b, c(-f64::powf(y, mu) * k.powf(alpha))).map(|v| v.re).unwrap_or(f64::NAN);
            let oracle = cosine_integral(h, 1.0, x, 1e-7);
            let mapped = mellin_cosine_map(&ml_as_h(mu, b), 1.0, alpha, c(f64::powf(y, mu)))
                .and_then(|spec| h_series(&h_reduce(&spec), c(x)));
            match (oracle, mapped) {
                (Ok(o), Ok(m)) => s.push((o.value - m.re).abs(), || format!("x={x}")),
                (Err(e), _) | (_, Err(e)) => s.fail(format!("x={x}: {e}")),
            }
        }
        s
    })
}
