//! Special functions: gamma helpers, Mittag-Leffler family, Wright and
//! Fox-Wright functions.

pub mod gamma;
mod mittag_leffler;
mod series;
mod wright;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use gamma::{gamma, ln_gamma, ln_pochhammer, ln_rgamma, rgamma};
pub use mittag_leffler::{
    ml_algebraic_asymptotic, ml_four, ml_four_with, ml_one, ml_three, ml_two, ml_two_with, MLParams,
};
pub use series::{SeriesConfig, SeriesValue};
pub(crate) use series::{log_term_error, term_from_log, Summation};
pub use wright::{fox_wright, wright, wright_scaled, wright_with, FoxWrightSpec};

/// A complex number stored as `value * exp(ln_scale)` so that results far
/// outside the `f64` exponent range stay representable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scaled {
    pub value: Complex64,
    pub ln_scale: f64,
}

impl Scaled {
    pub fn unscaled(value: Complex64) -> Self {
        Self { value, ln_scale: 0.0 }
    }

    /// The plain value; underflows to zero or overflows to infinity when the
    /// scale is out of range.
    pub fn to_complex(self) -> Complex64 {
        self.value * self.ln_scale.exp()
    }

    /// `ln |value * exp(ln_scale)|`.
    pub fn ln_abs(self) -> f64 {
        self.value.norm().ln() + self.ln_scale
    }

    /// Multiplies by `exp(ln_factor) * factor`.
    pub fn scale(self, factor: Complex64, ln_factor: f64) -> Self {
        Self { value: self.value * factor, ln_scale: self.ln_scale + ln_factor }
    }

    /// Ratio `self / other` as an ordinary number.
    pub fn ratio(self, other: Scaled) -> Complex64 {
        (self.value / other.value) * (self.ln_scale - other.ln_scale).exp()
    }
}
