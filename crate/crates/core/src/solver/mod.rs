//! Fourier-space kernels of the half-space problems and their inversion by
//! oscillatory quadrature, H-function closed forms, Wright series and
//! large-distance asymptotics.

mod asymptotic;
mod closed_form;
mod grid;
mod kernel;
mod pointwise;
mod series;

pub use asymptotic::{
    asymptotic_exponent, solution_asymptotic, solution_asymptotic_scaled, solution_asymptotic_with,
    ASYMPTOTIC_THRESHOLD,
};
pub use closed_form::{is_catalogued, solve_closed_form};
pub use grid::{solve_grid, solve_grid_with, GridRow, Method};
pub use kernel::{fourier_kernel, spectral_argument};
pub use pointwise::{solve_pointwise, solve_pointwise_with, PointValue, PointwiseOptions};
pub use series::{solution_series, solution_series_scaled};

#[cfg(test)]
mod tests;
