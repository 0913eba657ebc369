//! Quadrature rules private to the oracles.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub(crate) fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

fn gl40() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(40))
}

/// 40-point Gauss-Legendre on `[a, b]`.
pub(crate) fn gl_panel<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> Complex64 {
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    gl40().iter().map(|&(x, w)| w * f(c + h * x)).sum::<Complex64>() * h
}

/// Gauss-Legendre on `[a, b]` with bisection until halves agree with the
/// whole; returns `(value, error)`.
pub(crate) fn gl_adaptive<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64, tol: f64, depth: u32) -> (Complex64, f64) {
    let whole = gl_panel(f, a, b);
    gl_refine(f, a, b, whole, tol, depth)
}

fn gl_refine<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64, whole: Complex64, tol: f64, depth: u32) -> (Complex64, f64) {
    let m = 0.5 * (a + b);
    let (l, r) = (gl_panel(f, a, m), gl_panel(f, m, b));
    let err = (l + r - whole).norm();
    if err <= tol.max(1e-14 * (l + r).norm()) || depth == 0 {
        return (l + r, err);
    }
    let (lv, le) = gl_refine(f, a, m, l, 0.5 * tol, depth - 1);
    let (rv, re) = gl_refine(f, m, b, r, 0.5 * tol, depth - 1);
    (lv + rv, le + re)
}

/// Tanh-sinh quadrature on `[a, b]`, tolerant of integrable endpoint
/// singularities. Levels are halved until two successive estimates agree to
/// `tol`; returns `(value, error)`.
pub(crate) fn tanh_sinh<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64, tol: f64) -> (Complex64, f64) {
    let h = 0.5 * (b - a);
    const T_MAX: f64 = 3.5;
    // Node at parameter t: the distance to the nearer endpoint is computed
    // directly so that nodes crowding an endpoint keep full precision.
    let mut node = |t: f64| -> Complex64 {
        let u = 0.5 * PI * t.sinh();
        let w = 0.5 * PI * t.cosh() / u.cosh().powi(2);
        let d = h * 2.0 / (1.0 + (2.0 * u.abs()).exp());
        if d == 0.0 || w == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let x = if u < 0.0 { a + d } else { b - d };
        f(x) * w
    };
    let mut step = 0.5;
    let mut sum = node(0.0);
    let mut k = 1;
    while (k as f64) * step <= T_MAX {
        let t = k as f64 * step;
        sum += node(t) + node(-t);
        k += 1;
    }
    let mut prev = sum * step * h;
    for _level in 0..10 {
        step *= 0.5;
        let mut k = 1;
        while (k as f64) * step <= T_MAX {
            let t = k as f64 * step;
            sum += node(t) + node(-t);
            k += 2;
        }
        let cur = sum * step * h;
        let err = (cur - prev).norm();
        if err <= tol {
            return (cur, err);
        }
        prev = cur;
    }
    (prev, f64::INFINITY)
}

/// Cohen-Villegas-Zagier acceleration of `Σ (-1)^k a_k`.
pub(crate) fn cvz(a: &[Complex64]) -> Complex64 {
    let n = a.len() as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(n);
    d = 0.5 * (d + 1.0 / d);
    let (mut b, mut c) = (-1.0, -d);
    let mut s = Complex64::new(0.0, 0.0);
    for (k, &ak) in a.iter().enumerate() {
        let k = k as f64;
        c = b - c;
        s += c * ak;
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    s / d
}
