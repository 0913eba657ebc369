//! Fractional field equations in the half-space: special functions, Fox
//! H-functions, fractional operators, Fourier-space solvers and independent
//! numerical oracles.

// `!(x > 0.0)` deliberately rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Quadrature nodes and reference constants keep their published digits.
#![allow(clippy::excessive_precision)]

pub mod error;
pub(crate) mod quad;
pub mod foxh;
pub mod fracops;
pub mod oracle;
pub mod problem;
pub mod solver;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
