//! Compensated summation with the truncation rule shared by every series
//! evaluator in the crate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Truncation and switchover settings for series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    /// Relative size below which a term counts as negligible.
    pub tolerance: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
    /// Number of consecutive negligible terms required to stop.
    pub consecutive: usize,
    /// Mittag-Leffler switchover radius for the large-argument path.
    /// `None` picks the radius from the expected cancellation, see
    /// [`crate::specfun::ml_two_with`].
    pub large_argument_radius: Option<f64>,
    /// Use exp/cosh/sinh closed forms for the Mittag-Leffler parameters
    /// where they apply. Switching them off exercises the general paths.
    #[serde(default = "yes")]
    pub elementary_shortcuts: bool,
}

fn yes() -> bool {
    true
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            tolerance: f64::EPSILON,
            max_terms: 10_000,
            consecutive: 3,
            large_argument_radius: None,
            elementary_shortcuts: true,
        }
    }
}

/// A summed value with an estimate of the discarded tail plus accumulated
/// rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub trunc_bound: f64,
    pub terms: usize,
}

/// Kahan-compensated complex accumulator implementing the stopping rule:
/// stop once `consecutive` terms in a row satisfy `|t| <= tol * |S|` and
/// are non-increasing in magnitude.
#[derive(Debug, Clone)]
pub(crate) struct Summation {
    cfg: SeriesConfig,
    sum: Complex64,
    comp: Complex64,
    rounding: f64,
    max_term: f64,
    last: f64,
    prev: f64,
    run: usize,
    n: usize,
}

impl Summation {
    pub fn new(cfg: SeriesConfig) -> Self {
        Self {
            cfg,
            sum: Complex64::new(0.0, 0.0),
            comp: Complex64::new(0.0, 0.0),
            rounding: 0.0,
            max_term: 0.0,
            last: f64::INFINITY,
            prev: f64::INFINITY,
            run: 0,
            n: 0,
        }
    }

    /// Adds a term whose own relative error is about `rel_err`; returns
    /// `true` once the series has converged.
    pub fn push(&mut self, term: Complex64, rel_err: f64) -> bool {
        let y = term - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;

        let mag = term.norm();
        self.rounding += rel_err * mag;
        self.max_term = self.max_term.max(mag);
        self.prev = self.last;
        self.last = mag;
        self.n += 1;

        let small = mag <= self.cfg.tolerance * self.sum.norm();
        let decreasing = mag <= self.prev || self.prev == 0.0;
        if small && decreasing {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= self.cfg.consecutive
    }

    #[cfg(test)]
    pub fn exhausted(&self) -> bool {
        self.n >= self.cfg.max_terms
    }

    #[cfg(test)]
    pub fn sum(&self) -> Complex64 {
        self.sum
    }

    /// Ratio of the largest term to the final sum; a measure of the digits
    /// lost to cancellation.
    pub fn cancellation(&self) -> f64 {
        let s = self.sum.norm();
        if s == 0.0 {
            if self.max_term == 0.0 {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.max_term / s).max(1.0)
        }
    }

    pub fn finish(&self) -> SeriesValue {
        let ratio = if self.prev > 0.0 && self.prev.is_finite() {
            self.last / self.prev
        } else {
            0.0
        };
        let tail = if ratio < 0.9 {
            self.last * ratio / (1.0 - ratio)
        } else {
            self.last * self.cfg.consecutive as f64
        };
        let trunc_bound =
            2.0 * tail + self.rounding + 4.0 * f64::EPSILON * (self.sum.norm() + self.max_term);
        SeriesValue {
            value: self.sum,
            trunc_bound,
            terms: self.n,
        }
    }
}

/// `exp(ln_mag) * phase` with a checked magnitude; `None` on overflow.
pub(crate) fn term_from_log(ln_mag: f64, phase: Complex64) -> Option<Complex64> {
    if ln_mag > 709.0 {
        None
    } else if ln_mag < -745.0 {
        Some(Complex64::new(0.0, 0.0))
    } else {
        Some(phase * ln_mag.exp())
    }
}

/// Relative error of a term assembled from a log magnitude of size `ln_mag`.
pub(crate) fn log_term_error(ln_mag: f64, factors: usize) -> f64 {
    (ln_mag.abs() + 4.0 * factors as f64 + 4.0) * f64::EPSILON
}
