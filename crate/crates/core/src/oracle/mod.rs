//! Brute-force numerical transforms used as independent references. Nothing
//! here shares quadrature code with the evaluation paths it checks.

mod fourier;
mod laplace;
mod rules;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use fourier::{cosine_integral, separation_reference};
pub use laplace::{numeric_inverse_laplace, numeric_laplace, InverseLaplaceOptions};

/// A reference value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleValue<T = Complex64> {
    pub value: T,
    pub error: f64,
}
