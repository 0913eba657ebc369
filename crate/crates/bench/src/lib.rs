//! Shared fixtures for the benchmarks.

use fracfield::problem::{BoundaryTransform, GridSpec, Kind, ProblemSpec, SourceSpec, Variant};

/// d'Alembert wave problem with gaussian data; pointwise path.
pub fn gaussian_wave() -> ProblemSpec {
    let mut p = ProblemSpec::new(Kind::Wave, Variant::Quantum, 2.0, 0.0, 2.0, 1.0);
    p.f = BoundaryTransform::Gaussian { width: 0.5 };
    p
}

/// Poisson problem with delta data at `α = 2`; closed form and series.
pub fn delta_poisson() -> ProblemSpec {
    let mut p = ProblemSpec::new(Kind::Poisson, Variant::Quantum, 2.0, 0.0, 1.5, 0.5);
    p.f = BoundaryTransform::Delta;
    p.source = SourceSpec::DeltaDelta;
    p
}

/// Delta data at a non-integer space order; closed form through the
/// Mellin-cosine map.
pub fn delta_general_alpha() -> ProblemSpec {
    let mut p = ProblemSpec::new(Kind::Laplace, Variant::Quantum, 1.7, 0.0, 1.4, 0.5);
    p.g = BoundaryTransform::Delta;
    p
}

/// Square grid of `n × n` points on `[-3, 3] × [0.2, 2]`.
pub fn square_grid(n: usize) -> GridSpec {
    let step = |a: f64, b: f64| (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64).collect();
    GridSpec::new(step(-3.0, 3.0), step(0.2, 2.0))
}
