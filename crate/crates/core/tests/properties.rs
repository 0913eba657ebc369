//! Property-based invariants across the special functions, H-function
//! machinery, operators and solvers.

use fracfield::foxh::{h_eval, h_reduce, mellin_cosine_map, ml_as_h};
use fracfield::fracops::{psi, rl_integral, rl_integral_with, RieszFellerSymbol, SampledFunction};
use fracfield::problem::{BoundaryTransform, GridSpec, Kind, ProblemSpec, SourceSpec, Variant};
use fracfield::solver::{solve_grid, solve_pointwise, spectral_argument, Method};
use fracfield::specfun::{ml_four, ml_three, ml_two, wright, MLParams};
use fracfield::Complex64;
use proptest::prelude::*;

fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * b.norm().max(1e-300)
}

fn symbol() -> impl Strategy<Value = (f64, f64)> {
    (0.05f64..=2.0, -1.0f64..=1.0).prop_map(|(alpha, t)| (alpha, t * alpha.min(2.0 - alpha)))
}

fn gaussian_problem(kind: Kind, variant: Variant, alpha: f64, mu: f64, nu: f64, k: f64) -> ProblemSpec {
    let mut p = ProblemSpec::new(kind, variant, alpha, 0.0, mu, nu);
    p.k = k;
    p.f = BoundaryTransform::Gaussian { width: 0.6 };
    p.g = BoundaryTransform::Gaussian { width: 0.9 };
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn psi_is_conjugate_symmetric((alpha, theta) in symbol(), kappa in -50.0f64..50.0) {
        let sym = RieszFellerSymbol { alpha, theta };
        prop_assert_eq!(psi(&sym, -kappa), psi(&sym, kappa).conj());
    }

    #[test]
    fn ml_three_at_unit_gamma_is_ml_two(alpha in 0.3f64..2.0, beta in 0.2f64..3.0, re in -5.0f64..5.0, im in -5.0f64..5.0) {
        let z = Complex64::new(re, im);
        let two = ml_two(alpha, beta, z).unwrap();
        let three = ml_three(alpha, beta, 1.0, z).unwrap();
        prop_assert!(close(three, two, 1e-12), "{} vs {}", three, two);
    }

    #[test]
    fn ml_four_at_unit_kappa_is_ml_three(alpha in 0.3f64..2.0, beta in 0.2f64..3.0, gamma in 0.2f64..2.5, re in -4.0f64..4.0, im in -4.0f64..4.0) {
        let z = Complex64::new(re, im);
        let three = ml_three(alpha, beta, gamma, z).unwrap();
        let four = ml_four(MLParams { alpha, beta, gamma, kappa_ml: 1.0 }, z).unwrap();
        prop_assert!(close(four, three, 1e-12), "{} vs {}", four, three);
    }

    #[test]
    fn series_evaluators_are_deterministic(alpha in 0.3f64..2.0, beta in 0.2f64..3.0, a in -0.9f64..1.0, z in -20.0f64..10.0) {
        // Overflowing arguments must fail the same way every time too.
        let z = Complex64::new(z, 0.0);
        prop_assert_eq!(format!("{:?}", ml_two(alpha, beta, z)), format!("{:?}", ml_two(alpha, beta, z)));
        prop_assert_eq!(format!("{:?}", wright(a, beta, z)), format!("{:?}", wright(a, beta, z)));
    }

    #[test]
    fn mellin_cosine_map_dimensions(alpha in 1.05f64..2.0, beta in 0.2f64..2.5, mu in 1.05f64..1.95, y in 0.1f64..3.0) {
        let spec = ml_as_h(mu, beta);
        let mapped = mellin_cosine_map(&spec, 1.0, alpha, Complex64::new(y, 0.0)).unwrap();
        prop_assert_eq!((mapped.m, mapped.n, mapped.p, mapped.q), (spec.n + 1, spec.m, spec.q + 1, spec.p + 2));
        prop_assert_eq!((mapped.upper.len(), mapped.lower.len()), (mapped.p, mapped.q));
    }

    #[test]
    fn h_reduce_preserves_value(alpha in 0.6f64..2.0, beta in 0.3f64..2.5, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let spec = ml_as_h(alpha, beta);
        let z = Complex64::new(re, im);
        prop_assume!(z.norm() > 1e-3);
        let (Ok(full), Ok(reduced)) = (h_eval(&spec, z), h_eval(&h_reduce(&spec), z)) else {
            return Err(TestCaseError::reject("one side does not converge"));
        };
        prop_assert!(close(reduced, full, 1e-12), "{} vs {}", reduced, full);
    }

    #[test]
    fn variant_sign_symmetry(alpha in 1.05f64..=2.0, mu in 1.05f64..=2.0, nu in 0.0f64..=1.0, kappa in -20.0f64..20.0) {
        let rf = ProblemSpec::new(Kind::Laplace, Variant::RieszFeller, alpha, 0.0, mu, nu);
        let qu = ProblemSpec::new(Kind::Laplace, Variant::Quantum, alpha, 0.0, mu, nu);
        prop_assert_eq!(spectral_argument(&rf, kappa), -spectral_argument(&qu, kappa));
    }

    #[test]
    fn reduction_chain_is_bit_exact(alpha in 1.05f64..=2.0, mu in 1.05f64..=2.0, nu in 0.0f64..=1.0, x in -3.0f64..3.0, y in 0.1f64..2.0) {
        let laplace = gaussian_problem(Kind::Laplace, Variant::Quantum, alpha, mu, nu, 0.0);
        let poisson = gaussian_problem(Kind::Poisson, Variant::Quantum, alpha, mu, nu, 0.0);
        let helmholtz = gaussian_problem(Kind::Helmholtz, Variant::Quantum, alpha, mu, nu, 0.0);
        let wave = gaussian_problem(Kind::Wave, Variant::Quantum, alpha, mu, nu, 0.0);
        let base = solve_pointwise(&poisson, x, y).unwrap();
        for other in [&laplace, &helmholtz, &wave] {
            let v = solve_pointwise(other, x, y).unwrap();
            prop_assert_eq!(v.value.to_bits(), base.value.to_bits());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hermitian_data_gives_real_solutions(alpha in 1.05f64..=2.0, mu in 1.05f64..=2.0, nu in 0.0f64..=1.0, k in 0.0f64..1.5, x in -3.0f64..3.0, y in 0.2f64..2.0) {
        let mut p = gaussian_problem(Kind::Helmholtz, Variant::Quantum, alpha, mu, nu, k);
        p.source = SourceSpec::Zero;
        let v = solve_pointwise(&p, x, y).unwrap();
        prop_assert!(v.imag_residual.abs() < 1e-8, "imag residual {:e}", v.imag_residual);
    }

    #[test]
    fn grid_evaluation_is_deterministic(mu in 1.05f64..1.95, nu in 0.0f64..=1.0, x0 in -2.0f64..0.0) {
        let mut p = ProblemSpec::new(Kind::Laplace, Variant::Quantum, 2.0, 0.0, mu, nu);
        p.f = BoundaryTransform::Delta;
        let grid = GridSpec::new(vec![x0, 0.0, 0.5, 1.5], vec![0.4, 1.0]);
        let a = solve_grid(&p, &grid, Method::Auto).unwrap();
        let b = solve_grid(&p, &grid, Method::Auto).unwrap();
        let bits = |rows: &[fracfield::solver::GridRow]| rows.iter().map(|r| (r.x.to_bits(), r.y.to_bits(), r.value.to_bits())).collect::<Vec<_>>();
        prop_assert_eq!(bits(&a), bits(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn rl_integral_semigroup(m1 in 0.2f64..1.2, m2 in 0.2f64..1.2, y in 0.3f64..2.0) {
        let f = SampledFunction::smooth(|t| (-t).exp() * (1.0 + t).cos());
        let inner = f.clone();
        // I^{m1} f ~ t^{m1} at the origin; its quadrature noise sets the outer tolerance
        let once = SampledFunction::power_singular(m1, move |t| if t <= 0.0 { 0.0 } else { rl_integral_with(&inner, m1, t, 1e-10).unwrap() });
        let nested = rl_integral_with(&once, m2, y, 1e-7).unwrap();
        let direct = rl_integral(&f, m1 + m2, y).unwrap();
        prop_assert!((nested - direct).abs() <= 1e-6 * direct.abs().max(1.0), "{} vs {}", nested, direct);
    }
}
