//! Fractional operators: the Riesz-Feller symbol, Riemann-Liouville
//! integral, Hilfer-composite derivative, Prabhakar operator and the
//! Laplace-inversion kernel used by the solvers.

mod volterra;

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::ml_two;

pub use volterra::{hilfer_derivative, prabhakar_apply, rl_integral, rl_integral_with};

/// Order `α` and skewness `θ` of a Riesz-Feller operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RieszFellerSymbol {
    pub alpha: f64,
    pub theta: f64,
}

impl RieszFellerSymbol {
    pub fn new(alpha: f64, theta: f64) -> Result<Self> {
        let s = Self { alpha, theta };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 2.0) {
            return Err(Error::domain(format!("Riesz-Feller order must satisfy 0 < alpha <= 2, got {}", self.alpha)));
        }
        let bound = self.alpha.min(2.0 - self.alpha);
        if !(self.theta.abs() <= bound + 1e-15) {
            return Err(Error::domain(format!(
                "skewness must satisfy |theta| <= min(alpha, 2 - alpha) = {bound}, got {}",
                self.theta
            )));
        }
        Ok(())
    }

    /// `ψ(κ) = |κ|^α exp(i sign(κ) θπ/2)` with `sign(0) = 0`.
    pub fn psi(&self, kappa: f64) -> Complex64 {
        psi(self, kappa)
    }
}

/// `ψ_α^θ(κ) = |κ|^α exp(i sign(κ) θπ/2)`; zero at `κ = 0`.
pub fn psi(sym: &RieszFellerSymbol, kappa: f64) -> Complex64 {
    if kappa == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::from_polar(kappa.abs().powf(sym.alpha), kappa.signum() * sym.theta * PI / 2.0)
}

/// Order `μ` and type `ν` of the Hilfer-composite derivative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HilferOrder {
    pub mu: f64,
    pub nu: f64,
}

impl HilferOrder {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        let o = Self { mu, nu };
        o.validate()?;
        Ok(o)
    }

    /// Operator range `0 < μ <= 2`, `0 <= ν <= 1`.
    pub fn validate(&self) -> Result<()> {
        if !(self.mu > 0.0 && self.mu <= 2.0) {
            return Err(Error::domain(format!("Hilfer order must satisfy 0 < mu <= 2, got {}", self.mu)));
        }
        if !(0.0..=1.0).contains(&self.nu) {
            return Err(Error::domain(format!("Hilfer type must satisfy 0 <= nu <= 1, got {}", self.nu)));
        }
        Ok(())
    }

    /// Integer order `n` with `n - 1 < μ <= n`.
    pub fn n(&self) -> u32 {
        if self.mu <= 1.0 {
            1
        } else {
            2
        }
    }

    /// Order `(1-ν)(n-μ)` of the inner integral.
    pub fn inner(&self) -> f64 {
        (1.0 - self.nu) * (self.n() as f64 - self.mu)
    }

    /// Order `ν(n-μ)` of the outer integral.
    pub fn outer(&self) -> f64 {
        self.nu * (self.n() as f64 - self.mu)
    }
}

/// Behaviour of a sampled function near `y = 0`, used to pick quadrature
/// panels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Smoothness {
    Smooth,
    /// `f(y) ~ y^exponent` as `y -> 0`, with `exponent > -1`.
    PowerSingular { exponent: f64 },
}

/// A real function on `(0, ∞)` with a smoothness tag.
#[derive(Clone)]
pub struct SampledFunction {
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub smoothness: Smoothness,
}

impl SampledFunction {
    pub fn smooth(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self { f: Arc::new(f), smoothness: Smoothness::Smooth }
    }

    pub fn power_singular(exponent: f64, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self { f: Arc::new(f), smoothness: Smoothness::PowerSingular { exponent } }
    }

    pub fn eval(&self, y: f64) -> f64 {
        (self.f)(y)
    }

    /// Leading exponent at the origin (zero for smooth functions).
    pub fn exponent(&self) -> f64 {
        match self.smoothness {
            Smoothness::Smooth => 0.0,
            Smoothness::PowerSingular { exponent } => exponent,
        }
    }
}

impl fmt::Debug for SampledFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SampledFunction").field("smoothness", &self.smoothness).finish_non_exhaustive()
    }
}

/// Laplace-domain right-hand side of a Hilfer-composite equation of order
/// `1 < μ <= 2`: `s^μ F - s^{1-ν(2-μ)} init0 - s^{-ν(2-μ)} init1`.
pub fn hilfer_laplace_rhs(ord: HilferOrder, init0: f64, init1: f64, s: Complex64, fhat: Complex64) -> Complex64 {
    let e = ord.nu * (2.0 - ord.mu);
    s.powf(ord.mu) * fhat - s.powf(1.0 - e) * init0 - s.powf(-e) * init1
}

/// Sign choice in `s^μ ± r̂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Plus,
    Minus,
}

/// Inverse Laplace transform of `s^{ς-ν(2-μ)} / (s^μ ± r̂)`:
/// `y^{1-λ-ς} E_{μ,2-λ-ς}(∓ r̂ y^μ)` with `λ = (1-ν)(2-μ)`.
pub fn lemma1_kernel(ord: HilferOrder, varsigma: f64, rhat: Complex64, y: f64, branch: Branch) -> Result<Complex64> {
    if !(ord.mu > 1.0 && ord.mu <= 2.0) || !(0.0..=1.0).contains(&ord.nu) {
        return Err(Error::domain(format!("kernel needs 1 < mu <= 2 and 0 <= nu <= 1, got mu={}, nu={}", ord.mu, ord.nu)));
    }
    if !(varsigma >= 0.0) || !(y > 0.0) {
        return Err(Error::domain("kernel needs varsigma >= 0 and y > 0"));
    }
    let lambda = (1.0 - ord.nu) * (2.0 - ord.mu);
    let beta = 2.0 - lambda - varsigma;
    let sign = match branch {
        Branch::Plus => -1.0,
        Branch::Minus => 1.0,
    };
    let arg = sign * rhat * y.powf(ord.mu);
    Ok(y.powf(beta - 1.0) * ml_two(ord.mu, beta, arg)?)
}
