//! Frozen high-precision values from `tests/reference/gen_reference.py`
//! (mpmath, 300 digits, agreement with a 150-digit run required).
#![allow(clippy::excessive_precision, clippy::type_complexity)]

use fracfield::problem::{BoundaryTransform, Kind, ProblemSpec, SourceSpec, Variant};
use fracfield::solver::{solution_series, solve_closed_form};
use fracfield::specfun::{ml_two, ml_two_with, wright, wright_with, SeriesConfig};
use fracfield::Complex64;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn mittag_leffler_table() {
    #[rustfmt::skip]
    let table: [(f64, f64, f64, f64, f64, f64); 8] = [
        (0.5, 1.0, -3.0, 0.0, 0.17900115118138995042, 0.0),
        (1.5, 1.0, -10.0, 0.0, -0.10971305425274014669, 0.0),
        (1.5, 0.5, 5.0, 0.0, 21.241803705531387334, 0.0),
        (1.8, 1.2, -30.0, 0.0, 0.23152643864604263174, 0.0),
        (0.8, 0.9, 2.0, 3.0, 0.68638351150689756244, -7.733840170174686012),
        (1.25, 0.75, -50.0, 0.0, -0.0057850973991890150774, 0.0),
        (1.9, 1.6, -200.0, 0.0, -0.046479605622838091546, 0.0),
        (2.0, 1.5, -40.0, 0.0, 0.2860125733900066005, 0.0),
    ];
    for (a, b, zr, zi, er, ei) in table {
        let got = ml_two(a, b, Complex64::new(zr, zi)).unwrap();
        let want = Complex64::new(er, ei);
        let err = (got - want).norm() / want.norm();
        assert!(err < 1e-11, "E_{{{a},{b}}}({zr}+{zi}i): {got} vs {want}, rel {err:e}");
        let reported = ml_two_with(a, b, Complex64::new(zr, zi), &SeriesConfig::default()).unwrap();
        let actual = (reported.value - want).norm();
        assert!(actual <= reported.trunc_bound, "E_{{{a},{b}}}({zr}+{zi}i): error {actual:e} above bound {:e}", reported.trunc_bound);
    }
}

#[test]
fn wright_table() {
    #[rustfmt::skip]
    let table: [(f64, f64, f64, f64); 5] = [
        (-0.5, 0.5, -3.0, 0.059465144611814685766),
        (-0.75, 0.25, -5.0, 7.0532342151839291306e-29),
        (0.5, 1.0, 2.0, 6.6906279405071441357),
        (-0.3, 0.8, -10.0, 3.9583953093806524512e-6),
        (-0.6, 0.1, -8.0, 7.3582996759002116901e-15),
    ];
    for (a, b, z, want) in table {
        let got = wright(a, b, Complex64::new(z, 0.0)).unwrap();
        let err = rel(got.re, want);
        assert!(err < 1e-9 && got.im.abs() <= 1e-12 * want.abs(), "phi({a},{b};{z}) = {got}, want {want:e}, rel {err:e}");
        let reported = wright_with(a, b, Complex64::new(z, 0.0)).unwrap();
        let actual = (reported.value - want).norm();
        assert!(actual <= reported.trunc_bound, "phi({a},{b};{z}): error {actual:e} above bound {:e}", reported.trunc_bound);
    }
}

fn delta_problem(mu: f64, nu: f64, f: &str, g: &str, source: &str) -> ProblemSpec {
    let kind = if source == "zero" { Kind::Laplace } else { Kind::Poisson };
    let mut p = ProblemSpec::new(kind, Variant::Quantum, 2.0, 0.0, mu, nu);
    let data = |s: &str| if s == "delta" { BoundaryTransform::Delta } else { BoundaryTransform::Zero };
    p.f = data(f);
    p.g = data(g);
    if source == "delta_delta" {
        p.source = SourceSpec::DeltaDelta;
    }
    p
}

#[rustfmt::skip]
const SOLUTIONS: [(f64, f64, &str, &str, &str, f64, f64, f64); 6] = [
    (1.5, 0.5, "delta", "zero", "zero", 0.3, 1.0, 0.041793862623883778994),
    (1.5, 0.5, "delta", "zero", "zero", 1.0, 0.7, 0.42806466886681985014),
    (1.5, 0.5, "delta", "zero", "zero", 3.0, 1.2, 0.0091841073859823866294),
    (1.25, 0.0, "delta", "zero", "delta_delta", 0.5, 1.0, 0.23057135271013654776),
    (1.25, 0.0, "delta", "zero", "delta_delta", 2.0, 0.5, 0.12693240078296469689),
    (1.7, 1.0, "zero", "delta", "zero", 0.8, 1.5, 0.43749992326442764867),
];

#[test]
fn series_solutions_table() {
    for (mu, nu, f, g, s, x, y, want) in SOLUTIONS {
        let got = solution_series(&delta_problem(mu, nu, f, g, s), x, y).unwrap();
        let err = rel(got, want);
        assert!(err < 1e-10, "series mu={mu} ({x},{y}): {got} vs {want}, rel {err:e}");
    }
}

#[test]
fn closed_form_solutions_table() {
    for (mu, nu, f, g, s, x, y, want) in SOLUTIONS {
        let got = solve_closed_form(&delta_problem(mu, nu, f, g, s), x, y).unwrap();
        let err = rel(got, want);
        assert!(err < 1e-8, "closed form mu={mu} ({x},{y}): {got} vs {want}, rel {err:e}");
    }
}
