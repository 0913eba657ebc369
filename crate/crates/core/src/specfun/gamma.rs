//! Real gamma function helpers built on `libm`.
//!
//! Series in this crate work with `ln|Γ|` plus a sign so that terms with
//! very large or very small gamma factors never overflow before they are
//! combined.

/// Distance within which an argument is treated as sitting on a pole of Γ.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Γ(x).
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `(ln|Γ(x)|, sign Γ(x))`. Undefined (returns `+inf`) on the poles.
pub fn ln_gamma(x: f64) -> (f64, f64) {
    let (value, sign) = libm::lgamma_r(x);
    (value, if sign < 0 { -1.0 } else { 1.0 })
}

/// True when `x` is within `tol` of 0, -1, -2, ...
pub fn is_nonpositive_integer(x: f64, tol: f64) -> bool {
    x <= tol && (x - x.round()).abs() <= tol
}

/// 1/Γ(x), entire: exactly zero on the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x, POLE_TOLERANCE) {
        return 0.0;
    }
    if x > 0.0 && x < 170.0 {
        return 1.0 / gamma(x);
    }
    let (lg, sign) = ln_gamma(x);
    sign * (-lg).exp()
}

/// Logarithm and sign of the reciprocal gamma function, `None` on a pole
/// (where 1/Γ vanishes).
pub fn ln_rgamma(x: f64) -> Option<(f64, f64)> {
    if is_nonpositive_integer(x, POLE_TOLERANCE) {
        None
    } else {
        let (lg, sign) = ln_gamma(x);
        Some((-lg, sign))
    }
}

/// `ln|(a)_n|` and its sign for the generalized Pochhammer symbol
/// `(a)_n = Γ(a+n)/Γ(a)` with real (not necessarily integer) `n`.
///
/// Returns `Ok(None)` when the symbol is exactly zero (terminating case with
/// `a` a non-positive integer and integer `n > -a`).
pub fn ln_pochhammer(a: f64, n: f64) -> Result<Option<(f64, f64)>, String> {
    if n == 0.0 {
        return Ok(Some((0.0, 1.0)));
    }
    let a_pole = is_nonpositive_integer(a, POLE_TOLERANCE);
    let an_pole = is_nonpositive_integer(a + n, POLE_TOLERANCE);
    match (a_pole, an_pole) {
        (false, false) => {
            let (num, s1) = ln_gamma(a + n);
            let (den, s2) = ln_gamma(a);
            Ok(Some((num - den, s1 * s2)))
        }
        (true, _) => {
            // a = -m: (-m)_n = (-1)^n m!/(m-n)! for integer n <= m, zero beyond.
            let is_int = (n - n.round()).abs() <= POLE_TOLERANCE;
            if !is_int {
                return Err(format!("Pochhammer ({a})_{n} undefined for non-integer index"));
            }
            let m = (-a).round();
            let n = n.round();
            if n > m {
                return Ok(None);
            }
            let (lm, _) = ln_gamma(m + 1.0);
            let (lmn, _) = ln_gamma(m - n + 1.0);
            let sign = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
            Ok(Some((lm - lmn, sign)))
        }
        (false, true) => Err(format!("Pochhammer ({a})_{n} is infinite")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_known_values() {
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
        assert!((gamma(0.5) - std::f64::consts::PI.sqrt()).abs() < 1e-14);
        assert!((gamma(-0.5) + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn reciprocal_gamma_vanishes_on_poles() {
        for k in 0..20 {
            assert_eq!(rgamma(-(k as f64)), 0.0);
        }
        assert!((rgamma(1.5) - 1.0 / gamma(1.5)).abs() < 1e-15);
        // beyond the f64 range of Γ
        let big = rgamma(171.5);
        assert!(big > 0.0 && big < 1e-300);
        let neg = rgamma(-170.5);
        assert!(neg.is_finite() && neg.abs() > 1e300);
    }

    #[test]
    fn pochhammer_cases() {
        let (l, s) = ln_pochhammer(2.0, 3.0).unwrap().unwrap();
        assert!((s * l.exp() - 24.0).abs() < 1e-12);
        let (l, s) = ln_pochhammer(-3.0, 2.0).unwrap().unwrap();
        assert!((s * l.exp() - 6.0).abs() < 1e-12);
        assert!(ln_pochhammer(-3.0, 4.0).unwrap().is_none());
        assert!(ln_pochhammer(-0.5, 0.5).is_err());
    }
}
