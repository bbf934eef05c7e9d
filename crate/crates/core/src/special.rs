//! Special functions and dominants: the `3F2` series, the integral `K` and its
//! closed forms, MacGregor's `gamma(beta)`, the dominant `h` of the
//! `mu p^alpha (delta + rho p) + eta zp' p^{alpha-1}` subordination, the best
//! dominant `q` of the Briot-Bouquet type subordination, and the Silverman
//! inclusion criterion.
//!
//! Path integrals run along the radial segment `[0, z]`.

use serde::Serialize;
use std::f64::consts::{LN_2, PI};

use crate::cmath::{c, cis, exp_m1, ln_1p, C64, ONE, ZERO};
use crate::envelope::pow_about;
use crate::error::{JanowskiError, Result};
use crate::moebius::EQ_TOL;
use crate::quadrature::Integrator;

/// Series terms allowed before `NoConvergence`.
pub const MAX_TERMS: usize = 100_000;
/// Absolute tolerance of every quadrature in this module.
pub const QUAD_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue<T> {
    pub value: T,
    pub terms: usize,
}

fn nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// `3F2(a1, a2, a3; b1, b2; x)` for complex `|x| < 1`.
///
/// Summation stops once three consecutive terms are below `tol` relative to
/// the partial sum.
pub fn hyper_3f2_complex(upper: [f64; 3], lower: [f64; 2], x: C64, tol: f64) -> Result<SeriesValue<C64>> {
    if lower.iter().any(|&b| nonpositive_integer(b)) {
        return Err(JanowskiError::InvalidParameter(format!(
            "lower parameters {lower:?} include a non-positive integer"
        )));
    }
    if x.norm() >= 1.0 {
        return Err(JanowskiError::OutOfRange(format!(
            "|x| = {} outside the disk of convergence",
            x.norm()
        )));
    }
    let mut term = ONE;
    let mut sum = ONE;
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let ratio = (upper[0] + kf) * (upper[1] + kf) * (upper[2] + kf)
            / ((lower[0] + kf) * (lower[1] + kf) * (kf + 1.0));
        term *= x * ratio;
        sum += term;
        if term.norm() < tol * sum.norm() {
            small += 1;
            if small == 3 {
                return Ok(SeriesValue {
                    value: sum,
                    terms: k + 2,
                });
            }
        } else {
            small = 0;
        }
    }
    Err(JanowskiError::NoConvergence { terms: MAX_TERMS })
}

/// Real-argument `3F2`.
pub fn hyper_3f2(upper: [f64; 3], lower: [f64; 2], x: f64, tol: f64) -> Result<SeriesValue<f64>> {
    let s = hyper_3f2_complex(upper, lower, c(x, 0.0), tol)?;
    Ok(SeriesValue {
        value: s.value.re,
        terms: s.terms,
    })
}

fn check_k_params(a: C64, b: f64, alpha: f64) -> Result<()> {
    if a.norm() > 1.0 + EQ_TOL || !(0.0..=1.0).contains(&b) {
        return Err(JanowskiError::InvalidParameter(format!(
            "need |A| <= 1 and b in [0, 1] (got {a}, {b})"
        )));
    }
    if (a + b).norm() <= EQ_TOL {
        return Err(JanowskiError::DegenerateMap("A + b = 0".into()));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "alpha = {alpha} outside (0, 1]"
        )));
    }
    Ok(())
}

fn check_k_point(b: f64, z: C64) -> Result<()> {
    if z.norm() > 1.0 || b * z.norm() >= 1.0 {
        return Err(JanowskiError::OutOfRange(format!(
            "|z| = {} must be <= 1 and < 1/b",
            z.norm()
        )));
    }
    Ok(())
}

/// `((1 + At)/(1 - bt))^alpha - 1`, accurate near `t = 0`.
fn power_minus_one(a: C64, b: f64, alpha: f64, t: C64) -> C64 {
    let u = (a + b) * t / (ONE - t * b);
    exp_m1(ln_1p(u) * alpha)
}

/// `I(w) = int_0^w (((1 + At)/(1 - bt))^alpha - 1)/t dt`.
fn inner_integral(a: C64, b: f64, alpha: f64, w: C64) -> Result<C64> {
    if w == ZERO {
        return Ok(ZERO);
    }
    Integrator::with_tol(QUAD_TOL * 1e-2).integrate(
        |s| power_minus_one(a, b, alpha, w * s) / s,
        0.0,
        1.0,
    )
}

/// `K(z) = int_0^z exp(I(w)) dw` by nested quadrature.
pub fn k_function_quadrature(a: C64, b: f64, alpha: f64, z: C64) -> Result<C64> {
    check_k_params(a, b, alpha)?;
    check_k_point(b, z)?;
    if z == ZERO {
        return Ok(ZERO);
    }
    let outer = Integrator::with_tol(QUAD_TOL).integrate(
        |s| match inner_integral(a, b, alpha, z * s) {
            Ok(v) => v.exp(),
            Err(_) => c(f64::NAN, f64::NAN),
        },
        0.0,
        1.0,
    )?;
    Ok(z * outer)
}

/// `K` through the `3F2` form of `I` (`A = 0` or `b = 0`):
/// `I(t) = alpha b t 3F2(1, 1, 1 + alpha; 2, 2; bt)` or
/// `I(t) = alpha A t 3F2(1, 1, 1 - alpha; 2, 2; -At)`.
pub fn k_function_series(a: C64, b: f64, alpha: f64, z: C64) -> Result<C64> {
    check_k_params(a, b, alpha)?;
    check_k_point(b, z)?;
    let exponent = |t: C64| -> Result<C64> {
        if a == ZERO {
            Ok(t * alpha * b * hyper_3f2_complex([1.0, 1.0, 1.0 + alpha], [2.0, 2.0], t * b, 1e-16)?.value)
        } else if b == 0.0 {
            Ok(a * t * alpha * hyper_3f2_complex([1.0, 1.0, 1.0 - alpha], [2.0, 2.0], -a * t, 1e-16)?.value)
        } else {
            Err(JanowskiError::InvalidParameter(
                "series route needs A = 0 or b = 0".into(),
            ))
        }
    };
    exponent(ZERO)?;
    if z == ZERO {
        return Ok(ZERO);
    }
    let outer = Integrator::with_tol(QUAD_TOL).integrate(
        |s| match exponent(z * s) {
            Ok(v) => v.exp(),
            Err(_) => c(f64::NAN, f64::NAN),
        },
        0.0,
        1.0,
    )?;
    Ok(z * outer)
}

/// Closed forms at `alpha = 1`: `((1 - bz)^{-A/b} - 1)/A`, `-log(1 - bz)/b`, `(e^{Az} - 1)/A`.
pub fn k_closed_form(a: C64, b: f64, z: C64) -> Result<C64> {
    check_k_params(a, b, 1.0)?;
    check_k_point(b, z)?;
    Ok(if a == ZERO {
        -ln_1p(-z * b) / b
    } else if b == 0.0 {
        exp_m1(a * z) / a
    } else {
        exp_m1(-a / b * ln_1p(-z * b)) / a
    })
}

/// `K(z)`: closed form at `alpha = 1`, the `3F2` route when `A = 0` or
/// `b = 0` (falling back to quadrature where the series argument leaves the
/// unit disk), nested quadrature otherwise.
pub fn k_function(a: C64, b: f64, alpha: f64, z: C64) -> Result<C64> {
    check_k_params(a, b, alpha)?;
    if alpha == 1.0 {
        return k_closed_form(a, b, z);
    }
    if a == ZERO || (b == 0.0 && (a * z).norm() < 1.0) {
        return k_function_series(a, b, alpha, z);
    }
    k_function_quadrature(a, b, alpha, z)
}

/// MacGregor's order: convex of order `beta` implies starlike of order `gamma(beta)`.
pub fn macgregor_gamma(beta: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&beta) {
        return Err(JanowskiError::InvalidParameter(format!(
            "beta = {beta} outside [0, 1)"
        )));
    }
    let x = 1.0 - 2.0 * beta;
    Ok(if x == 0.0 {
        1.0 / (2.0 * LN_2)
    } else if x.abs() > 0.1 {
        x / (2.0 * (2f64.powf(x) - 1.0))
    } else {
        x / (2.0 * (x * LN_2).exp_m1())
    })
}

/// Parameters of `h(z) = W^{alpha gamma} (mu delta + mu rho W^gamma + eta gamma (A + b) z/((1 + Az)(1 - bz)))`,
/// `W = (1 + Az)/(1 - bz)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DominantSpec {
    pub mu: C64,
    pub delta: C64,
    pub rho: C64,
    pub eta: C64,
    pub alpha: f64,
    pub gamma: f64,
    pub a: C64,
    pub b: f64,
}

impl DominantSpec {
    /// Checks `|A| <= 1`, `b` in `[0, 1]`, `A + b != 0`, `alpha, gamma` in `[0, 1]`.
    pub fn validate(&self) -> Result<()> {
        if self.a.norm() > 1.0 + EQ_TOL || !(0.0..=1.0).contains(&self.b) {
            return Err(JanowskiError::InvalidParameter(format!(
                "need |A| <= 1 and b in [0, 1] (got {}, {})",
                self.a, self.b
            )));
        }
        if (self.a + self.b).norm() <= EQ_TOL {
            return Err(JanowskiError::DegenerateMap("A + b = 0".into()));
        }
        if !(0.0..=1.0).contains(&self.alpha) || !(0.0..=1.0).contains(&self.gamma) {
            return Err(JanowskiError::InvalidParameter(format!(
                "alpha = {}, gamma = {} must lie in [0, 1]",
                self.alpha, self.gamma
            )));
        }
        Ok(())
    }

    /// The side conditions under which `h` is the best dominant:
    /// `Re(mu/eta) > 0`, `Re delta > 0`, `Re rho >= 0`, `Re(1 + Ab) >= |A + b|`.
    pub fn check_best_dominant(&self) -> Result<()> {
        self.validate()?;
        let ratio = self.mu / self.eta;
        if !(ratio.re > 0.0) || !(self.delta.re > 0.0) || self.rho.re < 0.0 {
            return Err(JanowskiError::InvalidParameter(format!(
                "need Re(mu/eta) > 0, Re delta > 0, Re rho >= 0 (got {ratio}, {}, {})",
                self.delta, self.rho
            )));
        }
        let lhs = (ONE + self.a * self.b).re;
        if lhs < (self.a + self.b).norm() - EQ_TOL {
            return Err(JanowskiError::InvalidParameter(format!(
                "Re(1 + Ab) = {lhs} < |A + b| = {}",
                (self.a + self.b).norm()
            )));
        }
        Ok(())
    }

    /// `W(z) = (1 + Az)/(1 - bz)`.
    pub fn w(&self, z: C64) -> C64 {
        (ONE + self.a * z) / (ONE - z * self.b)
    }

    fn axis(&self) -> f64 {
        (ONE + self.a * self.b).arg()
    }

    /// `W^s` on the branch with value 1 at the origin.
    pub fn w_pow(&self, z: C64, s: f64) -> C64 {
        if s == 0.0 {
            return ONE;
        }
        pow_about(self.w(z), s, self.axis())
    }
}

/// Direct evaluation of `h(z)`.
pub fn dominant_h(spec: &DominantSpec, z: C64) -> Result<C64> {
    spec.validate()?;
    if z.norm() >= 1.0 {
        return Err(JanowskiError::OutOfRange(format!("|z| = {} must be < 1", z.norm())));
    }
    let s = spec;
    let w = s.w(z);
    if w == ZERO {
        return Err(JanowskiError::BranchUndefined("W(z) = 0".into()));
    }
    let tail = s.eta * s.gamma * (s.a + s.b) * z / ((ONE + s.a * z) * (ONE - z * s.b));
    Ok(s.w_pow(z, s.alpha * s.gamma) * (s.mu * s.delta + s.mu * s.rho * s.w_pow(z, s.gamma) + tail))
}

/// `h'(z)`, with `L = W'/W = A/(1 + Az) + b/(1 - bz)`:
/// `h' = W^{alpha gamma} (alpha gamma L bracket + mu rho gamma L W^gamma + eta gamma (L + zL'))`.
pub fn dominant_h_derivative(spec: &DominantSpec, z: C64) -> Result<C64> {
    dominant_h(spec, z)?;
    let s = spec;
    let one_a = ONE + s.a * z;
    let one_b = ONE - z * s.b;
    let l = s.a / one_a + s.b / one_b;
    let dl = -(s.a * s.a) / (one_a * one_a) + s.b * s.b / (one_b * one_b);
    let wg = s.w_pow(z, s.gamma);
    let wag = s.w_pow(z, s.alpha * s.gamma);
    let bracket = s.mu * s.delta + s.mu * s.rho * wg + s.eta * s.gamma * z * l;
    Ok(wag
        * (bracket * (s.alpha * s.gamma) * l
            + s.mu * s.rho * s.gamma * l * wg
            + s.eta * s.gamma * (l + z * dl)))
}

/// `h` of the `(1 - lambda) p + lambda zp'` subordination (`alpha = 1`,
/// `mu = 1 - lambda`, `eta = lambda`, `delta = 1`, `rho = 0`, `A = e^{im pi}`).
pub fn dominant_spec_linear(lambda: f64, m: f64, b: f64, gamma: f64) -> DominantSpec {
    DominantSpec {
        mu: c(1.0 - lambda, 0.0),
        delta: ONE,
        rho: ZERO,
        eta: c(lambda, 0.0),
        alpha: 1.0,
        gamma,
        a: cis(m * PI),
        b,
    }
}

fn sample_lambda<F: Fn(C64) -> C64>(lambda: &F, z: C64) -> Result<()> {
    let mut points: Vec<C64> = (0..=16).map(|k| z * (k as f64 / 16.0)).collect();
    for k in 1..=16 {
        let r = 0.999 * k as f64 / 16.0;
        points.extend((0..64).map(|j| cis(2.0 * PI * j as f64 / 64.0) * r));
    }
    let mut worst: Option<(f64, C64)> = None;
    for p in points {
        let l = lambda(p);
        if !(l.re > 0.0) && worst.map_or(true, |w| l.re < w.0) {
            worst = Some((l.re, p));
        }
    }
    match worst {
        Some((min_re, at)) => Err(JanowskiError::NonCaratheodoryLambda {
            min_re,
            re: at.re,
            im: at.im,
        }),
        None => Ok(()),
    }
}

/// Best dominant `q(z) = exp(E(z)) / int_0^1 exp(E(sz))/lambda(sz) ds`, with
/// `E(t) = int_0^t (W(tau)^alpha/lambda(tau) - 1)/tau dtau`, `W = (1 + Az)/(1 + Bz)`.
///
/// `beta` and `gamma` enter only through the admissibility condition
/// `Re(beta + gamma) > 0`.
#[allow(clippy::too_many_arguments)]
pub fn best_dominant_q<F>(lambda: F, alpha: f64, a: C64, b: C64, beta: C64, gamma: C64, z: C64) -> Result<C64>
where
    F: Fn(C64) -> C64,
{
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "alpha = {alpha} outside (0, 1]"
        )));
    }
    if !((beta + gamma).re > 0.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "Re(beta + gamma) = {} must be positive",
            (beta + gamma).re
        )));
    }
    if (a - b).norm() <= EQ_TOL {
        return Err(JanowskiError::DegenerateMap("A = B".into()));
    }
    if b.norm() > 1.0 + EQ_TOL || (a - b).norm() > 1.0 - (a * b.conj()).re + EQ_TOL {
        return Err(JanowskiError::InvalidParameter(format!(
            "need |B| <= 1 and |A - B| <= 1 - Re(A conj B) (got {a}, {b})"
        )));
    }
    if z.norm() >= 1.0 {
        return Err(JanowskiError::OutOfRange(format!("|z| = {} must be < 1", z.norm())));
    }
    sample_lambda(&lambda, z)?;
    // the defining integrals converge only when lambda(0) = 1
    if (lambda(ZERO) - ONE).norm() > 1e-9 {
        return Err(JanowskiError::InvalidParameter(format!(
            "lambda(0) = {} must equal 1",
            lambda(ZERO)
        )));
    }
    if z == ZERO {
        return Ok(ONE);
    }

    // W^alpha/lambda - 1 = exp(alpha log(1 + (A - B)t/(1 + Bt)) - log lambda) - 1
    let integrand = |t: C64| {
        let u = (a - b) * t / (ONE + b * t);
        exp_m1(ln_1p(u) * alpha - ln_1p(lambda(t) - ONE))
    };
    let exponent = |w: C64| -> Result<C64> {
        if w == ZERO {
            return Ok(ZERO);
        }
        Integrator::with_tol(QUAD_TOL * 1e-2).integrate(|s| integrand(w * s) / s, 0.0, 1.0)
    };
    let denominator = Integrator::with_tol(QUAD_TOL).integrate(
        |s| match exponent(z * s) {
            Ok(e) => e.exp() / lambda(z * s),
            Err(_) => c(f64::NAN, f64::NAN),
        },
        0.0,
        1.0,
    )?;
    Ok(exponent(z)?.exp() / denominator)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SilvermanReport {
    /// `beta (1 + b)^{alpha - 1} (1 + |A|)^{alpha + 1} <= alpha |A + b|`.
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

/// Whether `zp'/p^2 < beta z` forces `p < ((1 + Az)/(1 - bz))^alpha`.
pub fn silverman_inclusion(a: C64, b: f64, alpha: f64, beta: f64) -> Result<SilvermanReport> {
    check_k_params(a, b, alpha)?;
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "beta = {beta} outside (0, 1]"
        )));
    }
    let lhs = beta * (1.0 + b).powf(alpha - 1.0) * (1.0 + a.norm()).powf(alpha + 1.0);
    let rhs = alpha * (a + b).norm();
    Ok(SilvermanReport {
        holds: lhs <= rhs,
        lhs,
        rhs,
    })
}
