use approx::assert_relative_eq;
use num_complex::Complex64;

use super::*;
use crate::problem::{BoundaryTransform, GridSpec, Kind, ProblemSpec, SourceSpec, Variant};
use crate::specfun::ml_two;
use crate::Error;

fn quantum(kind: Kind, alpha: f64, mu: f64, nu: f64) -> ProblemSpec {
    ProblemSpec::new(kind, Variant::Quantum, alpha, 0.0, mu, nu)
}

fn dalembert() -> ProblemSpec {
    let mut p = quantum(Kind::Wave, 2.0, 2.0, 1.0);
    p.f = BoundaryTransform::Gaussian { width: 0.5 };
    p
}

#[test]
fn kernel_terms() {
    let mut p = quantum(Kind::Poisson, 1.5, 1.5, 0.5);
    p.source = SourceSpec::DeltaPower { beta: 0.3 };
    let (kappa, y): (f64, f64) = (0.8, 1.3);
    let lam = -kappa.powf(1.5);
    let expected = y.powf(1.5 - 0.3) * ml_two(1.5, 1.5 - 0.3 + 1.0, Complex64::new(lam * y.powf(1.5), 0.0)).unwrap();
    assert_relative_eq!(fourier_kernel(&p, kappa, y).unwrap().re, expected.re, max_relative = 1e-14);

    // Caputo: the f term is E_μ(y^μ Λ) f̂ with no power of y.
    let mut c = quantum(Kind::Laplace, 2.0, 1.5, 1.0);
    c.f = BoundaryTransform::Gaussian { width: 1.0 };
    let e = ml_two(1.5, 1.0, Complex64::new(-kappa * kappa * y.powf(1.5), 0.0)).unwrap();
    let fhat = (-0.5 * kappa * kappa).exp();
    assert_relative_eq!(fourier_kernel(&c, kappa, y).unwrap().re, e.re * fhat, max_relative = 1e-14);
}

#[test]
fn variant_sign_symmetry() {
    let mut q = ProblemSpec::new(Kind::Laplace, Variant::Quantum, 1.7, 0.0, 1.4, 0.3);
    q.f = BoundaryTransform::Gaussian { width: 1.0 };
    let mut r = q.clone();
    r.variant = Variant::RieszFeller;
    for kappa in [0.3, 1.1, -2.0] {
        assert_eq!(spectral_argument(&q, kappa), -spectral_argument(&r, kappa));
    }
}

#[test]
fn reduction_chain_is_exact() {
    let mut poisson = quantum(Kind::Poisson, 1.8, 1.6, 0.4);
    poisson.f = BoundaryTransform::Gaussian { width: 0.7 };
    let mut helm = poisson.clone();
    helm.kind = Kind::Helmholtz;
    let mut wave = poisson.clone();
    wave.kind = Kind::Wave;
    wave.variant = Variant::RieszFeller;
    let a = solve_pointwise(&poisson, 0.4, 0.9).unwrap();
    assert_eq!(a, solve_pointwise(&helm, 0.4, 0.9).unwrap());
    assert_eq!(a, solve_pointwise(&wave, 0.4, 0.9).unwrap());
    let mut laplace = poisson.clone();
    laplace.kind = Kind::Laplace;
    assert_eq!(a, solve_pointwise(&laplace, 0.4, 0.9).unwrap());
}

#[test]
fn dalembert_points() {
    let p = dalembert();
    for (x, t) in [(0.0, 0.5), (0.7, 1.0), (-1.3, 2.0), (3.0, 0.2)] {
        let v = solve_pointwise(&p, x, t).unwrap();
        let exact = 0.5 * (p.f.physical(x - t).unwrap() + p.f.physical(x + t).unwrap());
        assert!((v.value - exact).abs() < 1e-8, "({x},{t}): {} vs {exact}", v.value);
        assert!(v.imag_residual.abs() < 1e-8);
    }
    assert!(solve_pointwise(&p, 40.0, 1.0).unwrap().value.abs() < 1e-10);
}

#[test]
fn delta_data_need_regularization() {
    let mut p = quantum(Kind::Laplace, 2.0, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    assert!(matches!(solve_pointwise(&p, 0.7, 1.2), Err(Error::SlowDecay(_))));
}

#[test]
fn closed_form_matches_regularized_pointwise() {
    let mut p = quantum(Kind::Laplace, 2.0, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    let cf = solve_closed_form(&p, 0.7, 1.2).unwrap();
    let opts = PointwiseOptions { regularization: Some(4e-3), ..Default::default() };
    let pw = solve_pointwise_with(&p, 0.7, 1.2, &opts).unwrap();
    assert!((cf - pw.value).abs() < 1e-5, "{cf} vs {}", pw.value);
}

#[test]
fn closed_form_general_alpha_matches_pointwise() {
    let mut p = quantum(Kind::Poisson, 1.6, 1.4, 0.5);
    p.g = BoundaryTransform::Delta;
    p.source = SourceSpec::DeltaDelta;
    let cf = solve_closed_form(&p, 0.9, 1.1).unwrap();
    let opts = PointwiseOptions { regularization: Some(4e-3), ..Default::default() };
    let pw = solve_pointwise_with(&p, 0.9, 1.1, &opts).unwrap();
    assert!((cf - pw.value).abs() < 1e-5, "{cf} vs {}", pw.value);
}

#[test]
fn series_matches_closed_form() {
    let mut p = quantum(Kind::Poisson, 2.0, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    p.source = SourceSpec::DeltaDelta;
    for (x, y) in [(0.3, 1.0), (-1.1, 0.8), (0.0, 1.7)] {
        let s = solution_series(&p, x, y).unwrap();
        let c = solve_closed_form(&p, x, y).unwrap();
        assert_relative_eq!(s, c, max_relative = 1e-8);
    }
}

#[test]
fn series_at_origin_is_single_term() {
    let mut p = quantum(Kind::Laplace, 2.0, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    let y: f64 = 1.3;
    let lam = p.lambda();
    let expected = y.powf(-lam - 0.75) / 2.0 * crate::specfun::rgamma(1.0 - lam - 0.75);
    assert_relative_eq!(solution_series(&p, 0.0, y).unwrap(), expected, max_relative = 1e-14);
}

#[test]
fn asymptotic_exponent_and_ratio() {
    assert_relative_eq!(asymptotic_exponent(1.5, 4.0), -27.0, max_relative = 1e-14);
    let mut p = quantum(Kind::Laplace, 2.0, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    assert!(matches!(solution_asymptotic(&p, 1.0, 1.0), Err(Error::OutOfRegime { .. })));
    let a = solution_asymptotic_scaled(&p, 10.0, 1.0, 5.0).unwrap();
    let s = solution_series_scaled(&p, 10.0, 1.0).unwrap();
    assert!((a.ratio(s).re - 1.0).abs() < 0.05);
}

#[test]
fn asymptotic_f_term_matches_h_machinery() {
    use crate::foxh::{h_asymptotic_scaled, HFunctionSpec};
    for (mu, nu) in [(1.25, 1.0), (1.5, 0.5), (1.7, 0.2)] {
        let mut p = quantum(Kind::Laplace, 2.0, mu, nu);
        p.f = BoundaryTransform::Delta;
        let lam = p.lambda();
        let (x, y): (f64, f64) = (9.0, 1.4);
        let mut spec = HFunctionSpec::new(1, 0, vec![(1.0 - lam, mu)], vec![(1.0, 2.0)]);
        spec.arg_power = 2.0;
        spec.arg_scale = Complex64::new(y.powf(-mu), 0.0);
        spec.outer_power = -1.0;
        let h = h_asymptotic_scaled(&spec, Complex64::new(x, 0.0)).unwrap().scale(Complex64::new(1.0, 0.0), -lam * y.ln());
        let a = solution_asymptotic_scaled(&p, x, y, 5.0).unwrap();
        assert_relative_eq!(a.ratio(h).re, 1.0, max_relative = 1e-10);
    }
}

#[test]
fn no_closed_form_cases() {
    let mut p = ProblemSpec::new(Kind::Laplace, Variant::Quantum, 1.5, 0.3, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    assert!(matches!(solve_closed_form(&p, 1.0, 1.0), Err(Error::NoClosedForm(_))));
    let mut h = quantum(Kind::Helmholtz, 2.0, 1.5, 0.5);
    h.k = 1.0;
    h.f = BoundaryTransform::Delta;
    assert!(matches!(solve_closed_form(&h, 1.0, 1.0), Err(Error::NoClosedForm(_))));
    let mut gsn = quantum(Kind::Laplace, 2.0, 1.5, 0.5);
    gsn.f = BoundaryTransform::Gaussian { width: 1.0 };
    assert!(matches!(solve_closed_form(&gsn, 1.0, 1.0), Err(Error::NoClosedForm(_))));
    assert!(matches!(solution_series(&gsn, 1.0, 1.0), Err(Error::NoSeriesForm(_))));
}

#[test]
fn grid_order_and_errors() {
    let p = dalembert();
    let empty = solve_grid(&p, &GridSpec::new(vec![], vec![1.0]), Method::Auto).unwrap();
    assert!(empty.is_empty());
    let grid = GridSpec::new(vec![-1.0, 0.0, 1.0], vec![0.5, 1.0]);
    let rows = solve_grid(&p, &grid, Method::Auto).unwrap();
    let pts: Vec<_> = rows.iter().map(|r| (r.x, r.y)).collect();
    assert_eq!(pts, grid.points());
    assert!(rows.iter().all(|r| r.method == Method::Pointwise && r.error.is_none()));
    let rows = solve_grid(&p, &grid, Method::Series).unwrap();
    assert!(rows.iter().all(|r| r.error.is_some() && r.value.is_nan()));
}

#[test]
fn grid_auto_matches_closed_form() {
    let mut p = quantum(Kind::Poisson, 2.0, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    p.source = SourceSpec::DeltaDelta;
    let grid = GridSpec::new(vec![0.2, 0.9, 2.5], vec![0.6, 1.4]);
    let auto = solve_grid(&p, &grid, Method::Auto).unwrap();
    let cf = solve_grid(&p, &grid, Method::ClosedForm).unwrap();
    for (a, c) in auto.iter().zip(&cf) {
        assert_eq!(a.method, Method::ClosedForm);
        assert!((a.value - c.value).abs() < 1e-5);
    }
}
