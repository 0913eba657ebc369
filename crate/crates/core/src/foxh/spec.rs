use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn unit_power() -> f64 {
    1.0
}

fn is_zero(v: &f64) -> bool {
    *v == 0.0
}

/// A Fox H-function `H_{p,q}^{m,n}` together with the bookkeeping needed to
/// evaluate expressions of the form
/// `prefactor * x^outer_power * H[arg_scale * x^arg_power]` at a physical
/// argument `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HFunctionSpec {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// `(a_j, A_j)`, `j = 1..p`.
    pub upper: Vec<(f64, f64)>,
    /// `(b_j, B_j)`, `j = 1..q`.
    pub lower: Vec<(f64, f64)>,
    #[serde(default = "one")]
    pub prefactor: Complex64,
    #[serde(default = "unit_power")]
    pub arg_power: f64,
    #[serde(default = "one")]
    pub arg_scale: Complex64,
    /// Extra power of the physical argument multiplying the result.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub outer_power: f64,
}

impl HFunctionSpec {
    /// A bare `H_{p,q}^{m,n}[x]` with unit prefactor and scale; `p` and `q`
    /// are taken from the parameter lists.
    pub fn new(m: usize, n: usize, upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Self {
        Self {
            m,
            n,
            p: upper.len(),
            q: lower.len(),
            upper,
            lower,
            prefactor: one(),
            arg_power: 1.0,
            arg_scale: one(),
            outer_power: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.upper.len() != self.p || self.lower.len() != self.q {
            return Err(Error::domain(format!(
                "H-function declares p = {}, q = {} but has {} upper and {} lower pairs",
                self.p,
                self.q,
                self.upper.len(),
                self.lower.len()
            )));
        }
        if self.n > self.p || self.m < 1 || self.m > self.q {
            return Err(Error::domain(format!(
                "H-function orders need 0 <= n <= p and 1 <= m <= q, got m={}, n={}, p={}, q={}",
                self.m, self.n, self.p, self.q
            )));
        }
        for &(v, scale) in self.upper.iter().chain(&self.lower) {
            if !(scale > 0.0) || !v.is_finite() || !scale.is_finite() {
                return Err(Error::domain(format!("H-function parameter pair ({v}, {scale}) needs a positive finite scale")));
            }
        }
        Ok(())
    }

    /// `Σ B_j - Σ A_j`.
    pub fn m_star(&self) -> f64 {
        self.lower.iter().map(|p| p.1).sum::<f64>() - self.upper.iter().map(|p| p.1).sum::<f64>()
    }

    /// `Π A_j^{-A_j} Π B_j^{B_j}`, the radius of convergence of the residue
    /// series when `m_star() == 0`.
    pub fn balance_radius(&self) -> f64 {
        let up: f64 = self.upper.iter().map(|&(_, a)| a.powf(-a)).product();
        let lo: f64 = self.lower.iter().map(|&(_, b)| b.powf(b)).product();
        up * lo
    }

    /// `Σ_{j<=n} A_j - Σ_{j>n} A_j + Σ_{j<=m} B_j - Σ_{j>m} B_j`.
    pub fn theta_star(&self) -> f64 {
        let (un, up) = self.upper.split_at(self.n);
        let (lm, lq) = self.lower.split_at(self.m);
        un.iter().map(|p| p.1).sum::<f64>() - up.iter().map(|p| p.1).sum::<f64>()
            + lm.iter().map(|p| p.1).sum::<f64>()
            - lq.iter().map(|p| p.1).sum::<f64>()
    }

    /// The argument `arg_scale * x^arg_power` handed to the raw H-function,
    /// with its phase on the principal branch.
    pub fn argument(&self, x: Complex64) -> Complex64 {
        if x.norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let ln = x.ln() * self.arg_power + self.arg_scale.ln();
        let z = ln.exp();
        // Re-derive the phase on (-π, π] so that powers use the principal branch.
        Complex64::from_polar(z.norm(), wrap_phase(ln.im))
    }

    /// `prefactor * x^outer_power`.
    pub fn outer_factor(&self, x: Complex64) -> Complex64 {
        if self.outer_power == 0.0 {
            self.prefactor
        } else {
            self.prefactor * x.powf(self.outer_power)
        }
    }
}

pub(crate) fn wrap_phase(phi: f64) -> f64 {
    use std::f64::consts::PI;
    let mut p = phi % (2.0 * PI);
    if p > PI {
        p -= 2.0 * PI;
    } else if p <= -PI {
        p += 2.0 * PI;
    }
    p
}

/// Spec of `E_{α,β}` as `H_{1,2}^{1,1}[-z | (0,1); (0,1), (1-β,α)]`.
pub fn ml_as_h(alpha: f64, beta: f64) -> HFunctionSpec {
    let mut spec = HFunctionSpec::new(1, 1, vec![(0.0, 1.0)], vec![(0.0, 1.0), (1.0 - beta, alpha)]);
    spec.arg_scale = Complex64::new(-1.0, 0.0);
    spec
}

/// Parameters pairs are considered equal within this tolerance when
/// cancelling Gamma factors.
const PAIR_TOLERANCE: f64 = 1e-12;

fn same(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() <= PAIR_TOLERANCE && (a.1 - b.1).abs() <= PAIR_TOLERANCE
}

/// Cancels Gamma factors shared between numerator and denominator.
///
/// A lower pair among the first `m` equal to an upper pair beyond the first
/// `n` cancels (`m`, `p`, `q` drop by one), as does an upper pair among the
/// first `n` equal to a lower pair beyond the first `m` (`n`, `p`, `q` drop
/// by one). At least one lower pair is always kept in the first group.
pub fn h_reduce(spec: &HFunctionSpec) -> HFunctionSpec {
    let mut s = spec.clone();
    loop {
        let mut changed = false;
        if s.m > 1 {
            'outer: for i in 0..s.m {
                for j in s.n..s.p {
                    if same(s.lower[i], s.upper[j]) {
                        s.lower.remove(i);
                        s.upper.remove(j);
                        s.m -= 1;
                        s.p -= 1;
                        s.q -= 1;
                        changed = true;
                        break 'outer;
                    }
                }
            }
        }
        if !changed {
            'outer2: for i in 0..s.n {
                for j in s.m..s.q {
                    if same(s.upper[i], s.lower[j]) {
                        s.upper.remove(i);
                        s.lower.remove(j);
                        s.n -= 1;
                        s.p -= 1;
                        s.q -= 1;
                        changed = true;
                        break 'outer2;
                    }
                }
            }
        }
        if !changed {
            return s;
        }
    }
}
