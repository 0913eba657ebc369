use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what}: series did not converge within {terms} terms")]
    NonConvergence { what: &'static str, terms: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("coincident poles at s = {pole} (logarithmic case is not supported)")]
    CoincidentPoles { pole: f64 },

    #[error("quadrature failed: estimated error {estimate:e} exceeds tolerance {tolerance:e}")]
    QuadratureFailure { estimate: f64, tolerance: f64 },

    #[error("finite-difference derivative failed: {0}")]
    DifferentiationFailure(String),

    #[error("validity conditions violated: {}", .0.join("; "))]
    Validity(Vec<String>),

    #[error("integrand decays too slowly for pointwise inversion: {0}")]
    SlowDecay(String),

    #[error("no closed form is catalogued for this problem: {0}")]
    NoClosedForm(String),

    #[error("no series representation is catalogued for this problem: {0}")]
    NoSeriesForm(String),

    #[error("argument {value} is outside the asymptotic regime (threshold {threshold})")]
    OutOfRegime { value: f64, threshold: f64 },

    #[error("contour inversion failed: doubling estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    ContourFailure { estimate: f64, tolerance: f64 },

    #[error("Laplace tail bound {bound:e} dominates tolerance {tolerance:e}")]
    TailDominance { bound: f64, tolerance: f64 },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case name of the variant, for machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonConvergence { .. } => "non_convergence",
            Error::Domain(_) => "domain",
            Error::CoincidentPoles { .. } => "coincident_poles",
            Error::QuadratureFailure { .. } => "quadrature_failure",
            Error::DifferentiationFailure(_) => "differentiation_failure",
            Error::Validity(_) => "validity",
            Error::SlowDecay(_) => "slow_decay",
            Error::NoClosedForm(_) => "no_closed_form",
            Error::NoSeriesForm(_) => "no_series_form",
            Error::OutOfRegime { .. } => "out_of_regime",
            Error::ContourFailure { .. } => "contour_failure",
            Error::TailDominance { .. } => "tail_dominance",
            Error::InvalidProblem(_) => "invalid_problem",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
