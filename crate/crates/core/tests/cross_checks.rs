//! Solver paths against each other and against the independent oracles.

use fracfield::oracle::separation_reference;
use fracfield::problem::{BoundaryTransform, Kind, ProblemSpec, SourceSpec, Variant};
use fracfield::solver::{solve_closed_form, solve_pointwise, solve_pointwise_with, PointwiseOptions};
use fracfield::verify::{run_suite, Report, Suite, VerifyOptions};

#[test]
fn helmholtz_matches_separation_oracle() {
    let mut p = ProblemSpec::new(Kind::Helmholtz, Variant::Quantum, 2.0, 0.0, 2.0, 1.0);
    p.k = 1.0;
    p.f = BoundaryTransform::Gaussian { width: 0.5 };
    let mut worst: f64 = 0.0;
    for &x in &[-2.0, -0.7, 0.0, 0.4, 1.3, 2.5] {
        for &y in &[0.3, 1.0, 1.7] {
            let got = solve_pointwise(&p, x, y).unwrap();
            let want = separation_reference(&p, x, y).unwrap();
            assert!(want.error < 1e-9, "oracle error {:e} at ({x},{y})", want.error);
            worst = worst.max((got.value - want.value).abs());
        }
    }
    assert!(worst <= 1e-6, "max abs error {worst:e}");
}

#[test]
fn gaussian_solution_vanishes_far_away() {
    let mut p = ProblemSpec::new(Kind::Laplace, Variant::Quantum, 1.6, 0.0, 1.5, 0.5);
    p.f = BoundaryTransform::Gaussian { width: 0.5 };
    let near = solve_pointwise(&p, 0.0, 1.0).unwrap().value.abs();
    let far = solve_pointwise(&p, 60.0, 1.0).unwrap().value.abs();
    assert!(far < 1e-3 * near, "|N(60,1)| = {far:e} vs |N(0,1)| = {near:e}");
}

#[test]
fn closed_form_matches_regularized_pointwise() {
    let mut p = ProblemSpec::new(Kind::Poisson, Variant::Quantum, 2.0, 0.0, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    p.source = SourceSpec::DeltaDelta;
    let opts = PointwiseOptions { regularization: Some(4e-3), ..Default::default() };
    let cf = solve_closed_form(&p, 0.7, 1.2).unwrap();
    let pw = solve_pointwise_with(&p, 0.7, 1.2, &opts).unwrap();
    assert!((cf - pw.value).abs() <= 1e-5, "{cf} vs {}", pw.value);
}

#[test]
fn verify_report_round_trips_through_json() {
    let opts = VerifyOptions { seed: 7, ..Default::default() };
    let report = run_suite(Suite::Identities, &opts);
    assert!(report.passed);
    assert_eq!(report.seed, 7);
    let text = serde_json::to_string(&report).unwrap();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back.checks.len(), report.checks.len());
    assert_eq!(back.checks[0].name, report.checks[0].name);
    assert_eq!(back.checks[0].error.to_bits(), report.checks[0].error.to_bits());
}

#[test]
fn seeded_reports_are_reproducible() {
    let opts = VerifyOptions { seed: 99, ..Default::default() };
    let errors = |r: &Report| r.checks.iter().map(|c| (c.name.clone(), c.error.to_bits(), c.points)).collect::<Vec<_>>();
    let a = run_suite(Suite::Hfunction, &opts);
    let b = run_suite(Suite::Hfunction, &opts);
    assert_eq!(errors(&a), errors(&b));
}
