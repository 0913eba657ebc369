//! Fox H-functions: parameter specs, residue-series and large-argument
//! evaluation, Gamma-pair reduction and the Mellin-cosine parameter map.

mod asymptotic;
mod series;
mod spec;
mod transform;

pub use asymptotic::{h_asymptotic, h_asymptotic_scaled, AsymptoticParams};
pub use series::{h_eval, h_eval_scaled, h_series, h_series_with};
pub use spec::{h_reduce, ml_as_h, HFunctionSpec};
pub use transform::mellin_cosine_map;
