//! Bracketed scalar root finding: coarse sign-change scan followed by bisection.

use crate::error::{JanowskiError, Result};

/// Bisection on `[lo, hi]` until the bracket is narrower than `tol`.
///
/// `f(lo)` and `f(hi)` must have opposite signs (or one of them be zero).
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo.signum() == f_hi.signum() {
        return Err(JanowskiError::NoBracket(format!(
            "f({lo}) = {f_lo:e}, f({hi}) = {f_hi:e}"
        )));
    }
    // 200 halvings exhaust f64 resolution on any finite bracket
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Every sign change of `f` on the uniform grid of `n` cells over `[a, b]`,
/// each refined by bisection to `tol`.
pub fn scan_roots<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize, tol: f64) -> Vec<f64> {
    let h = (b - a) / n as f64;
    let mut roots = Vec::new();
    let mut x0 = a;
    let mut f0 = f(x0);
    for k in 1..=n {
        let x1 = if k == n { b } else { a + k as f64 * h };
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f1 != 0.0 && f0.is_finite() && f1.is_finite() && f0.signum() != f1.signum() {
            if let Ok(root) = bisect(&f, x0, x1, tol) {
                roots.push(root);
            }
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

/// Unique root of an increasing function on `[lo, hi]`, by bisection to `tol`.
pub fn monotone_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    bisect(f, lo, hi, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisects_sqrt_two() {
        let root = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((root - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn rejects_bad_bracket() {
        let err = bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).unwrap_err();
        assert!(matches!(err, JanowskiError::NoBracket(_)));
    }

    #[test]
    fn scan_finds_all_sine_roots() {
        let roots = scan_roots(f64::sin, 0.5, 10.0, 97, 1e-13);
        assert_eq!(roots.len(), 3);
        for (k, r) in roots.iter().enumerate() {
            assert!((r - (k + 1) as f64 * std::f64::consts::PI).abs() < 1e-12);
        }
    }
}
