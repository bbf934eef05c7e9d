//! Radius computations: subordination radius between shifted powered Janowski
//! functions, class inclusion, Uralegaddi and reciprocal-order radii, and the
//! starlikeness radius for `f' < ((1 + Az)/(1 + Bz))^beta`.

use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::cmath::{C64, ONE};
use crate::error::{JanowskiError, Result};
use crate::moebius::{JanowskiParams, EQ_TOL};
use crate::roots::{bisect, scan_roots};

/// `(1 - delta) ((1 + Cz)/(1 + Dz))^beta + delta  <  (1 - gamma) ((1 + Az)/(1 + Bz))^alpha + gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusProblem {
    pub a: C64,
    pub b: C64,
    pub alpha: f64,
    pub gamma: C64,
    pub c: C64,
    pub d: C64,
    pub beta: f64,
    pub delta: C64,
}

impl RadiusProblem {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a: C64,
        b: C64,
        alpha: f64,
        gamma: C64,
        c: C64,
        d: C64,
        beta: f64,
        delta: C64,
    ) -> Result<Self> {
        if (a - b).norm() <= EQ_TOL || (c - d).norm() <= EQ_TOL {
            return Err(JanowskiError::DegenerateMap("A = B or C = D".into()));
        }
        if b.norm() > 1.0 + EQ_TOL || d.norm() > 1.0 + EQ_TOL {
            return Err(JanowskiError::InvalidParameter("|B| and |D| must be <= 1".into()));
        }
        if (ONE - gamma).norm() <= EQ_TOL || (ONE - delta).norm() <= EQ_TOL {
            return Err(JanowskiError::InvalidParameter("gamma and delta must differ from 1".into()));
        }
        for (name, x) in [("alpha", alpha), ("beta", beta)] {
            if !(x > 0.0 && x <= 1.0) {
                return Err(JanowskiError::InvalidParameter(format!(
                    "{name} = {x} outside (0, 1]"
                )));
            }
        }
        Ok(RadiusProblem {
            a,
            b,
            alpha,
            gamma,
            c,
            d,
            beta,
            delta,
        })
    }

    /// Same map on both sides.
    pub fn identity(p: &JanowskiParams) -> Result<Self> {
        Self::new(
            p.a(),
            p.b(),
            p.alpha(),
            p.gamma(),
            p.a(),
            p.b(),
            p.alpha(),
            p.gamma(),
        )
    }

    pub fn target(&self) -> Result<JanowskiParams> {
        JanowskiParams::new(self.a, self.b)?
            .powered(self.alpha)?
            .shifted(self.gamma)
    }

    pub fn source(&self) -> Result<JanowskiParams> {
        JanowskiParams::new(self.c, self.d)?
            .powered(self.beta)?
            .shifted(self.delta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusReport {
    /// Radius clamped to `(0, 1]`.
    pub r: f64,
    pub unclamped: f64,
}

/// `R = alpha |A - B| |1 - gamma| / (beta |C - D| |1 - delta| + beta |AD(gamma - 1) + B(C(1 - delta) + D(delta - gamma))|)`,
/// clamped to `(0, 1]`.  The common factor `|1 - gamma|^{1/alpha - 1}` is cancelled.
pub fn subordination_radius(p: &RadiusProblem) -> RadiusReport {
    let num = p.alpha * (p.a - p.b).norm() * (ONE - p.gamma).norm();
    let cross = p.a * p.d * (p.gamma - 1.0)
        + p.b * (p.c * (ONE - p.delta) + p.d * (p.delta - p.gamma));
    let den = p.beta * (p.c - p.d).norm() * (ONE - p.delta).norm() + p.beta * cross.norm();
    let unclamped = if den == 0.0 { f64::INFINITY } else { num / den };
    RadiusReport {
        r: unclamped.min(1.0),
        unclamped,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InclusionReport {
    /// `beta (|C - D| + |AD - BC|) <= alpha |A - B|`.
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

fn check_pair(x: C64, y: C64) -> Result<()> {
    if (x - y).norm() <= EQ_TOL {
        return Err(JanowskiError::DegenerateMap(format!("{x} = {y}")));
    }
    if y.norm() > 1.0 + EQ_TOL {
        return Err(JanowskiError::InvalidParameter(format!("|{y}| > 1")));
    }
    Ok(())
}

/// Whether `S*(C, D, beta)` is contained in `S*(A, B, alpha)`.
pub fn class_inclusion(
    a: C64,
    b: C64,
    alpha: f64,
    c: C64,
    d: C64,
    beta: f64,
) -> Result<InclusionReport> {
    check_pair(a, b)?;
    check_pair(c, d)?;
    let lhs = beta * ((c - d).norm() + (a * d - b * c).norm());
    let rhs = alpha * (a - b).norm();
    Ok(InclusionReport {
        holds: lhs <= rhs + 1e-12,
        lhs,
        rhs,
    })
}

/// Strongly starlike of order `beta` inside `S*(A, B, alpha)`: `beta (2 + |A + B|) <= alpha |A - B|`.
pub fn strongly_starlike_in(a: C64, b: C64, alpha: f64, beta: f64) -> Result<InclusionReport> {
    check_pair(a, b)?;
    let lhs = beta * (2.0 + (a + b).norm());
    let rhs = alpha * (a - b).norm();
    Ok(InclusionReport {
        holds: lhs <= rhs + 1e-12,
        lhs,
        rhs,
    })
}

/// `S*(C, D, beta)` inside strongly starlike of order `alpha`: `beta (|C + D| + |C - D|) <= 2 alpha`.
pub fn in_strongly_starlike(c: C64, d: C64, beta: f64, alpha: f64) -> Result<InclusionReport> {
    check_pair(c, d)?;
    let lhs = beta * ((c + d).norm() + (c - d).norm());
    let rhs = 2.0 * alpha;
    Ok(InclusionReport {
        holds: lhs <= rhs + 1e-12,
        lhs,
        rhs,
    })
}

fn check_radius_inputs(a: C64, b: C64, alpha: f64) -> Result<()> {
    check_pair(a, b)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "alpha = {alpha} outside (0, 1]"
        )));
    }
    Ok(())
}

fn ratio_radius(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        1.0
    } else {
        (num / den).min(1.0)
    }
}

/// Radius of `Re(zf'/f) < beta2` for `f` in `S*(A, B, alpha)`, `beta2 > 1`.
pub fn uralegaddi_radius(a: C64, b: C64, alpha: f64, beta2: f64) -> Result<f64> {
    check_radius_inputs(a, b, alpha)?;
    if !(beta2 > 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "beta2 = {beta2} must exceed 1"
        )));
    }
    let den = 2.0 * (beta2 + 1.0) + (a - b * (2.0 * beta2 - 1.0)).norm();
    Ok(ratio_radius(alpha * (a - b).norm(), den))
}

/// Radius of starlikeness of reciprocal order `beta2` in `[0, 1)` for `f` in `S*(A, B, alpha)`.
pub fn reciprocal_radius(a: C64, b: C64, alpha: f64, beta2: f64) -> Result<f64> {
    check_radius_inputs(a, b, alpha)?;
    if !(0.0..1.0).contains(&beta2) {
        return Err(JanowskiError::InvalidParameter(format!(
            "beta2 = {beta2} outside [0, 1)"
        )));
    }
    let den = 2.0 * beta2 + (a - b * (2.0 * beta2 - 1.0)).norm();
    Ok(ratio_radius(alpha * (a - b).norm(), den))
}

/// Root of `2a + (2/pi) atan a = 1` on `(0, 1)`.
pub fn alpha_star() -> f64 {
    bisect(|a| 2.0 * a + 2.0 / PI * a.atan() - 1.0, 0.0, 1.0, 1e-16)
        .expect("sign change on [0, 1]")
}

/// Root of `atan a = (1 - 2a)/2` on `(0, 1)`, the equation without the factor `pi`.
pub fn alpha_star_literal() -> f64 {
    bisect(|a| a.atan() - (1.0 - 2.0 * a) / 2.0, 0.0, 1.0, 1e-16)
        .expect("sign change on [0, 1]")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarlikeRadius {
    /// Closed-form root.
    pub r0: f64,
    /// Root of the defining equation by bisection.
    pub r0_bisection: f64,
    pub alpha_star: f64,
    /// `(alpha* + (2/pi) atan alpha*) pi/(2 beta)`.
    pub theta: f64,
    /// `|beta asin((A - B) r0/(1 - AB r0^2)) - (1 - alpha*) pi/2|`.
    pub residual: f64,
    /// No sign change of the defining equation on `(0, r0)`.
    pub smallest: bool,
}

/// Radius of starlikeness for `f' < ((1 + Az)/(1 + Bz))^beta`, `0 < A <= 1`, `-1 <= B < 0`.
pub fn starlike_radius(a: f64, b: f64, beta: f64) -> Result<StarlikeRadius> {
    if !(a > 0.0 && a <= 1.0) || !(-1.0..0.0).contains(&b) {
        return Err(JanowskiError::InvalidParameter(format!(
            "need 0 < A <= 1 and -1 <= B < 0 (got {a}, {b})"
        )));
    }
    let star = alpha_star();
    let level = (star + 2.0 / PI * star.atan()) * FRAC_PI_2;
    if star.atan() > (beta - star) * FRAC_PI_2 + 1e-12 {
        return Err(JanowskiError::InvalidParameter(format!(
            "beta = {beta} below 1 - alpha* = {}",
            1.0 - star
        )));
    }
    let theta = level / beta;
    let s = theta.sin();
    let ab = a * b;
    let spread = a - b;
    if s > spread / (1.0 - ab) + 1e-15 {
        return Err(JanowskiError::NoRoot(format!(
            "sin(theta) = {s} exceeds the supremum {} of (A - B)x/(1 - ABx^2)",
            spread / (1.0 - ab)
        )));
    }
    let disc = spread * spread + 4.0 * ab * s * s;
    if disc < 0.0 {
        return Err(JanowskiError::NoRoot(format!("negative discriminant {disc}")));
    }
    let r0 = (-spread + disc.sqrt()) / (2.0 * ab * s);

    let defining = |x: f64| beta * (spread * x / (1.0 - ab * x * x)).min(1.0).asin() - level;
    let r0_bisection = bisect(defining, 0.0, 1.0, 1e-15)
        .map_err(|_| JanowskiError::NoRoot("defining equation has no sign change on (0, 1]".into()))?;
    let smallest = scan_roots(defining, 0.0, r0 * (1.0 - 1e-9), 1000, 1e-15).is_empty();
    Ok(StarlikeRadius {
        r0,
        r0_bisection,
        alpha_star: star,
        theta,
        residual: defining(r0).abs(),
        smallest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmath::{c, ZERO};

    fn real(x: f64) -> C64 {
        c(x, 0.0)
    }

    #[test]
    fn identity_radius_is_one() {
        let p = RadiusProblem::new(c(0.3, 0.2), c(-0.5, 0.1), 0.6, c(0.2, -0.1), c(0.3, 0.2), c(-0.5, 0.1), 0.6, c(0.2, -0.1)).unwrap();
        assert_eq!(subordination_radius(&p).r, 1.0);
    }

    #[test]
    fn radius_examples() {
        let p = RadiusProblem::new(real(1.0), real(-1.0), 1.0, ZERO, real(1.0), real(-1.0), 0.5, ZERO).unwrap();
        let rep = subordination_radius(&p);
        assert_eq!(rep.r, 1.0);
        assert!((rep.unclamped - 2.0).abs() < 1e-15);
        let p = RadiusProblem::new(real(1.0), ZERO, 1.0, ZERO, real(1.0), real(-1.0), 1.0, ZERO).unwrap();
        assert!((subordination_radius(&p).r - 1.0 / 3.0).abs() < 1e-15);
        assert!(RadiusProblem::new(real(1.0), real(1.0), 1.0, ZERO, real(1.0), ZERO, 1.0, ZERO).is_err());
    }

    #[test]
    fn inclusion_examples() {
        let a = c(0.4, -0.3);
        let b = c(-0.2, 0.5);
        assert!(class_inclusion(a, b, 0.7, a, b, 0.7).unwrap().holds);
        assert!(class_inclusion(real(1.0), real(-1.0), 0.5, real(1.0), real(-1.0), 0.25).unwrap().holds);
        for i in 0..10 {
            for j in 0..10 {
                let (a1, a2) = (i as f64 / 10.0, j as f64 / 10.0);
                let rep = class_inclusion(real(1.0 - 2.0 * a1), real(-1.0), 1.0, real(1.0 - 2.0 * a2), real(-1.0), 1.0).unwrap();
                assert_eq!(rep.holds, a1 <= a2, "a1 = {a1}, a2 = {a2}");
            }
        }
    }

    #[test]
    fn specialisations_match_general_criterion() {
        let (a, b) = (c(0.5, 0.2), c(-0.3, -0.4));
        let general = class_inclusion(a, b, 0.8, real(1.0), real(-1.0), 0.3).unwrap();
        let special = strongly_starlike_in(a, b, 0.8, 0.3).unwrap();
        assert!((general.lhs - special.lhs).abs() < 1e-15);
        let general = class_inclusion(real(1.0), real(-1.0), 0.6, a, b, 0.9).unwrap();
        let special = in_strongly_starlike(a, b, 0.9, 0.6).unwrap();
        assert!((general.lhs - special.lhs).abs() < 1e-15);
        assert!((general.rhs - special.rhs).abs() < 1e-15);
    }

    #[test]
    fn uralegaddi_and_reciprocal_examples() {
        assert!((uralegaddi_radius(real(1.0), real(-1.0), 1.0, 2.0).unwrap() - 0.2).abs() < 1e-15);
        assert!(uralegaddi_radius(real(1.0), real(-1.0), 1e-9, 2.0).unwrap() < 1e-9);
        assert!(uralegaddi_radius(real(1.0), real(-1.0), 1.0, 1e9).unwrap() < 1e-8);
        assert!(uralegaddi_radius(real(1.0), real(-1.0), 1.0, 1.0).is_err());

        let (a, b) = (c(0.3, 0.1), c(0.2, -0.2));
        let expected = (0.8 * (a - b).norm() / (a + b).norm()).min(1.0);
        assert!((reciprocal_radius(a, b, 0.8, 0.0).unwrap() - expected).abs() < 1e-15);
        assert_eq!(reciprocal_radius(real(1.0), real(-1.0), 1.0, 0.5).unwrap(), 1.0);
        assert!(reciprocal_radius(real(1.0), real(-1.0), 1e-9, 0.5).unwrap() < 1e-8);
    }

    #[test]
    fn alpha_star_values() {
        let a = alpha_star();
        assert!((a - 0.383_448_602_770_689_9).abs() < 1e-15);
        assert!((2.0 * a + 2.0 / PI * a.atan() - 1.0).abs() < 1e-12);
        assert!((alpha_star_literal() - 0.252_587_515_114_857_7).abs() < 1e-15);
    }

    #[test]
    fn starlike_radius_unit_case() {
        let s = starlike_radius(1.0, -1.0, 1.0).unwrap();
        assert!((s.r0 - (s.theta / 2.0).tan()).abs() < 1e-14);
        assert!((s.r0 - 0.526_009_864_499_938_3).abs() < 1e-12);
        assert!((s.r0 - s.r0_bisection).abs() < 1e-9);
        assert!(s.residual < 1e-9);
        assert!(s.smallest);
    }

    #[test]
    fn starlike_radius_limits_and_errors() {
        let small = starlike_radius(1.0, -1.0, 1e6).unwrap();
        assert!(small.r0 < 1e-6);
        assert!(starlike_radius(1.0, -1.0, 0.5).is_err());
        assert!(matches!(
            starlike_radius(0.6, -0.6, 0.62),
            Err(JanowskiError::NoRoot(_))
        ));
    }
}
