//! Closed-form sector parameters for argument-implication results: the
//! `mu_1, mu_2, mu, delta` of the `f/g` and `p^alpha (1 + lambda zp'/p)^gamma`
//! implications, the infimum `eta`, the reciprocal-order sector and the
//! double-subordination tilt.
//!
//! Every hypothesis here has the form `F < ((1 + e^{i mu pi} z)/(1 - z))^delta`,
//! i.e. `-delta (1 - mu) pi/2 < arg F < delta (1 + mu) pi/2`.

use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::cmath::{cis, C64};
use crate::error::{JanowskiError, Result};
use crate::moebius::EQ_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorParams {
    pub mu1: f64,
    pub mu2: f64,
    pub mu: f64,
    /// Exponent of the hypothesis dominant.
    pub delta: f64,
    /// `|i tan(m pi/4)|`.
    pub a_mag: f64,
    pub beta0: f64,
    pub eta: f64,
}

impl SectorParams {
    /// Argument interval `[lo, hi]` of the hypothesis dominant.
    pub fn hypothesis_sector(&self) -> (f64, f64) {
        (
            -self.delta * (1.0 - self.mu) * FRAC_PI_2,
            self.delta * (1.0 + self.mu) * FRAC_PI_2,
        )
    }
}

fn mu_of(mu1: f64, mu2: f64) -> f64 {
    if mu1 + mu2 > 0.0 {
        (mu2 - mu1) / (mu1 + mu2)
    } else {
        0.0
    }
}

fn check_m(m: f64) -> Result<f64> {
    if !(-1.0..1.0).contains(&m) {
        return Err(JanowskiError::InvalidParameter(format!(
            "m = {m} outside [-1, 1)"
        )));
    }
    Ok((m * PI / 4.0).tan().abs())
}

fn check_unit_power(name: &str, x: f64) -> Result<()> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "{name} = {x} outside (0, 1]"
        )));
    }
    Ok(())
}

/// Parameters of the `f'/g' => f/g` implication; `arg_ratio` is the worst-case
/// value of `arg(g/(zg'))` supplied by the caller.
///
/// `beta` is the lower bound on `|g/(zg')|`; `beta = 1` is admitted so that the
/// `g(z) = z` specialisation can be expressed.
pub fn thm1_params(alpha: f64, m: f64, beta: f64, arg_ratio: f64) -> Result<SectorParams> {
    check_unit_power("alpha", alpha)?;
    check_unit_power("beta", beta)?;
    let a_mag = check_m(m)?;
    if a_mag >= 1.0 - EQ_TOL {
        return Err(JanowskiError::InvalidParameter(
            "|tan(m pi/4)| must be < 1".into(),
        ));
    }
    let k = alpha * beta * (1.0 - a_mag);
    let correction = |sign: f64| {
        2.0 / (alpha * PI)
            * (k * arg_ratio.cos() / (1.0 + a_mag + sign * k * arg_ratio.sin())).atan()
    };
    let mu1 = 1.0 - m + correction(1.0);
    let mu2 = 1.0 + m + correction(-1.0);
    Ok(SectorParams {
        mu1,
        mu2,
        mu: mu_of(mu1, mu2),
        delta: alpha * (mu1 + mu2) / 2.0,
        a_mag,
        beta0: 0.0,
        eta: 0.0,
    })
}

/// The `g(z) = z` case: parameters plus the raw bound on `|arg(zf'/f)|`,
/// `alpha pi + atan(alpha (1 - |a|)/(1 + |a|))`.
///
/// The bound can exceed `pi/2`; it is an angle, not an order of starlikeness.
pub fn cor1_params(alpha: f64, m: f64) -> Result<(SectorParams, f64)> {
    let params = thm1_params(alpha, m, 1.0, 0.0)?;
    let a = params.a_mag;
    let arg_bound = alpha * PI + (alpha * (1.0 - a) / (1.0 + a)).atan();
    Ok((params, arg_bound))
}

/// Parameters of the `p^alpha (1 + lambda zp'/p)^gamma => p` implication.
pub fn thm2_params(alpha: f64, beta: f64, gamma: f64, m: f64, eta: f64) -> Result<SectorParams> {
    if !(alpha > 0.0) || !(0.0..=1.0).contains(&gamma) || !(eta >= 0.0) || !beta.is_finite() {
        return Err(JanowskiError::InvalidParameter(format!(
            "need alpha > 0, gamma in [0, 1], eta >= 0 (got {alpha}, {gamma}, {eta})"
        )));
    }
    let a_mag = check_m(m)?;
    let shift = 2.0 * gamma / PI * eta.atan();
    let mu1 = alpha * beta * (1.0 - m) + shift;
    let mu2 = alpha * beta * (1.0 + m) + shift;
    let beta0 = (-2.0 * gamma * eta.atan() / (alpha * PI * (1.0 - m))).max(0.0);
    Ok(SectorParams {
        mu1,
        mu2,
        mu: mu_of(mu1, mu2),
        delta: (mu1 + mu2) / 2.0,
        a_mag,
        beta0,
        eta,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EtaInfimum {
    pub eta: f64,
    pub at: C64,
}

/// Infimum over the disk of `beta Re(lambda)/(1 + beta |Im(lambda)|)`.
///
/// Evaluated on an `n x n` polar grid (radii `k/n`, `k = 1..n`, plus the
/// centre) and refined by golden-section search along the unit circle.
pub fn eta_infimum<F>(lambda: F, beta: f64, n: usize) -> Result<EtaInfimum>
where
    F: Fn(C64) -> C64 + Sync,
{
    if !(beta > 0.0) || n < 4 {
        return Err(JanowskiError::InvalidParameter(format!(
            "need beta > 0 and n >= 4 (got {beta}, {n})"
        )));
    }
    let quotient = |z: C64| {
        let l = lambda(z);
        (beta * l.re / (1.0 + beta * l.im.abs()), l.re)
    };
    let (min_q, at, min_re) = (0..=n)
        .into_par_iter()
        .flat_map_iter(|k| {
            let r = k as f64 / n as f64;
            let spokes = if k == 0 { 1 } else { n };
            (0..spokes).map(move |j| cis(2.0 * PI * j as f64 / n as f64) * r)
        })
        .map(|z| {
            let (q, re) = quotient(z);
            (q, z, re)
        })
        .reduce(
            || (f64::INFINITY, C64::new(0.0, 0.0), f64::INFINITY),
            |x, y| {
                let best = if y.0 < x.0 || (y.0 == x.0 && (y.1.re, y.1.im) < (x.1.re, x.1.im)) {
                    (y.0, y.1)
                } else {
                    (x.0, x.1)
                };
                (best.0, best.1, x.2.min(y.2))
            },
        );
    if min_re < 0.0 {
        return Err(JanowskiError::NegativeRealPart(min_re));
    }

    let mut best = (min_q, at);
    // the grid's best boundary angle seeds a bracketed golden-section search
    let step = 2.0 * PI / n as f64;
    let seed = (0..n)
        .map(|j| j as f64 * step)
        .min_by(|x, y| {
            quotient(cis(*x)).0.partial_cmp(&quotient(cis(*y)).0).unwrap()
        })
        .expect("n >= 4");
    let theta = golden_min(|t| quotient(cis(t)).0, seed - step, seed + step, 1e-12);
    let q = quotient(cis(theta)).0;
    if q < best.0 {
        best = (q, cis(theta));
    }
    Ok(EtaInfimum {
        eta: best.0,
        at: best.1,
    })
}

fn golden_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - ratio * (b - a);
    let mut x2 = a + ratio * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = f(x2);
        }
    }
    0.5 * (a + b)
}

/// `delta = (2/pi) asin(beta/(1 - alpha))`, the sector exponent of `f/(zf') - alpha`.
pub fn reciprocal_order_sector(alpha: f64, beta: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) || !(beta > 0.0 && beta <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "need alpha in [0, 1) and beta in (0, 1] (got {alpha}, {beta})"
        )));
    }
    if beta > 1.0 - alpha {
        return Err(JanowskiError::OutOfRange(format!(
            "beta = {beta} exceeds 1 - alpha = {}",
            1.0 - alpha
        )));
    }
    Ok(2.0 / PI * (beta / (1.0 - alpha)).min(1.0).asin())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DoubleTilt {
    /// Sum of the two half-widths, radians.
    pub mu: f64,
    /// Tilt in units of `pi/2`: `Re(e^{-i gamma pi/2} p) > 0`.
    pub gamma: f64,
    /// `atan` of the centre direction of `(1 + c e^{im pi} z)/(1 - dz)`.
    pub center_outer: f64,
    /// `atan` of the centre direction of `(1 + a e^{il pi} z)/(1 - bz)`.
    pub center_inner: f64,
}

fn half_width(x: f64, y: f64, phase: f64) -> f64 {
    let cross = 2.0 * x * y * (phase * PI).cos();
    ((x * x + y * y + cross) / (1.0 + x * x * y * y + cross))
        .clamp(0.0, 1.0)
        .sqrt()
        .asin()
}

fn center_angle(x: f64, y: f64, phase: f64) -> f64 {
    (x * y * (phase * PI).sin()).atan2(x * y * (phase * PI).cos() + 1.0)
}

/// Tilt of `p` from `Q < (1 + a e^{il pi} z)/(1 - bz)` and
/// `Q p^alpha < (1 + c e^{im pi} z)/(1 - dz)`.
///
/// Fails with `ConditionFailed` carrying `mu - alpha pi/2` when the combined
/// half-widths exceed `alpha pi/2`.
#[allow(clippy::too_many_arguments)]
pub fn double_subordination_tilt(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    l: f64,
    m: f64,
    alpha: f64,
) -> Result<DoubleTilt> {
    for (name, x) in [("a", a), ("b", b), ("c", c), ("d", d)] {
        if !(0.0..=1.0).contains(&x) {
            return Err(JanowskiError::InvalidParameter(format!(
                "{name} = {x} outside [0, 1]"
            )));
        }
    }
    if !(-1.0..=1.0).contains(&l) || !(-1.0..=1.0).contains(&m) {
        return Err(JanowskiError::InvalidParameter(format!(
            "l = {l}, m = {m} must lie in [-1, 1]"
        )));
    }
    check_unit_power("alpha", alpha)?;
    if (cis(l * PI) * a + b).norm() <= EQ_TOL || (cis(m * PI) * c + d).norm() <= EQ_TOL {
        return Err(JanowskiError::DegenerateMap(
            "a e^{il pi} + b or c e^{im pi} + d vanishes".into(),
        ));
    }
    let mu = half_width(c, d, m) + half_width(a, b, l);
    if mu > alpha * FRAC_PI_2 + 1e-12 {
        return Err(JanowskiError::ConditionFailed {
            excess: mu - alpha * FRAC_PI_2,
        });
    }
    let center_outer = center_angle(c, d, m);
    let center_inner = center_angle(a, b, l);
    let gamma = if mu == 0.0 {
        0.0
    } else {
        (center_outer - center_inner) / mu
    };
    Ok(DoubleTilt {
        mu,
        gamma,
        center_outer,
        center_inner,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmath::c;

    #[test]
    fn thm1_reduces_without_rotation() {
        for &alpha in &[0.2, 0.5, 1.0] {
            let s = thm1_params(alpha, 0.0, 1.0, 0.0).unwrap();
            let expected = 1.0 + 2.0 / (alpha * PI) * alpha.atan();
            assert!((s.mu1 - expected).abs() < 1e-15);
            assert!((s.mu2 - expected).abs() < 1e-15);
            assert_eq!(s.mu, 0.0);
        }
    }

    #[test]
    fn thm1_small_beta_drops_correction() {
        let s = thm1_params(0.7, 0.3, 1e-14, 0.4).unwrap();
        assert!((s.mu1 - 0.7).abs() < 1e-12);
        assert!((s.mu2 - 1.3).abs() < 1e-12);
    }

    #[test]
    fn thm1_half_half_half() {
        let s = thm1_params(0.5, 0.5, 0.5, 0.0).unwrap();
        let t = (PI / 8.0).tan();
        let corr = 4.0 / PI * ((1.0 - t) / (4.0 * (1.0 + t))).atan();
        assert!((s.mu1 - (0.5 + corr)).abs() < 1e-15);
        assert!((s.mu2 - (1.5 + corr)).abs() < 1e-15);
        assert!((s.mu - (s.mu2 - s.mu1) / (s.mu1 + s.mu2)).abs() < 1e-15);
        assert!((s.delta - 0.5 * (s.mu1 + s.mu2) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn hypothesis_sector_is_alpha_mu() {
        let s = thm1_params(0.6, -0.2, 0.8, 0.3).unwrap();
        let (lo, hi) = s.hypothesis_sector();
        assert!((lo + 0.6 * s.mu1 * FRAC_PI_2).abs() < 1e-14);
        assert!((hi - 0.6 * s.mu2 * FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn cor1_examples() {
        let (s, _) = cor1_params(0.4, 0.0).unwrap();
        assert!((s.mu1 - (1.0 + 2.0 / (0.4 * PI) * 0.4f64.atan())).abs() < 1e-15);
        let (_, bound) = cor1_params(1e-12, 0.3).unwrap();
        assert!(bound < 1e-11);
        let (_, bound) = cor1_params(1.0, 0.5).unwrap();
        assert!((bound - (PI + PI / 8.0)).abs() < 1e-14);
        assert!(cor1_params(0.5, -1.0).is_err());
    }

    #[test]
    fn thm2_examples() {
        let s = thm2_params(1.0, 1.0, 1.0, 0.0, 1.0).unwrap();
        assert!((s.mu1 - 1.5).abs() < 1e-15 && (s.mu2 - 1.5).abs() < 1e-15);
        assert!((s.delta - 1.5).abs() < 1e-15);
        let s = thm2_params(0.7, 0.4, 0.0, 0.3, 2.0).unwrap();
        assert_eq!(s.beta0, 0.0);
        assert!((s.mu1 - 0.7 * 0.4 * 0.7).abs() < 1e-15);
        assert!((s.mu2 - 0.7 * 0.4 * 1.3).abs() < 1e-15);
        let s = thm2_params(0.5, 0.8, 0.6, 0.0, 0.3).unwrap();
        assert!((s.delta - (0.4 + 1.2 / PI * 0.3f64.atan())).abs() < 1e-15);
        assert_eq!(s.mu, 0.0);
    }

    #[test]
    fn eta_examples() {
        let one = |_z: C64| c(1.0, 0.0);
        assert!((eta_infimum(one, 1.0, 64).unwrap().eta - 1.0).abs() < 1e-15);
        assert!((eta_infimum(one, 2.0, 64).unwrap().eta - 2.0).abs() < 1e-15);
        let e = eta_infimum(|z| c(1.0, 0.0) + z / 2.0, 1.0, 256).unwrap();
        assert!((e.eta - 0.451_416_229_645_136_47).abs() < 1e-12);
        assert!((e.at.arg() - 2.717_56).abs() < 1e-4);
        assert!(matches!(
            eta_infimum(|z| z * 2.0, 1.0, 32),
            Err(JanowskiError::NegativeRealPart(_))
        ));
    }

    #[test]
    fn reciprocal_examples() {
        assert!((reciprocal_order_sector(0.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((reciprocal_order_sector(0.5, 0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((reciprocal_order_sector(0.5, 0.25).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(matches!(
            reciprocal_order_sector(0.5, 0.6),
            Err(JanowskiError::OutOfRange(_))
        ));
    }

    #[test]
    fn tilt_examples() {
        let t = double_subordination_tilt(0.3, 0.2, 0.4, 0.1, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(t.gamma, 0.0);
        let t = double_subordination_tilt(0.0, 0.3, 0.0, 0.4, 0.6, -0.2, 1.0).unwrap();
        assert!((t.mu - (0.4f64.asin() + 0.3f64.asin())).abs() < 1e-15);
        assert_eq!(t.gamma, 0.0);
        match double_subordination_tilt(1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0) {
            Err(JanowskiError::ConditionFailed { excess }) => {
                assert!((excess - FRAC_PI_2).abs() < 1e-12)
            }
            other => panic!("{other:?}"),
        }
        let t = double_subordination_tilt(0.2, 0.3, 0.3, 0.4, 0.5, 0.7, 1.0).unwrap();
        assert!(t.gamma.is_finite() && t.mu <= FRAC_PI_2);
    }
}
