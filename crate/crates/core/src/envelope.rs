//! Boundary curve and extremal bounds of `(1 - gamma) ((1 + Az)/(1 + Bz))^alpha + gamma`.
//!
//! On `|z| = r` the first-order image is the circle `C + R e^{it}`; writing
//! `u + iv` for that circle, the powered boundary is `M(t) e^{i N(t)}` with
//! `M = |u + iv|^alpha` and `N = alpha arg(u + iv)`.  The branch of `arg` is
//! centred on the image's axis `arg(1 - A conj(B))`, which keeps it continuous
//! whenever the origin is not interior to the image.

use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};
use std::io::{self, Write};

use crate::cmath::{arg_about, cis, C64, ONE, ZERO};
use crate::error::{JanowskiError, Result};
use crate::moebius::{image_disk, JanowskiParams, EQ_TOL};
use crate::roots::scan_roots;

/// Coarse scan resolution for the critical-point search.
pub const SCAN_CELLS: usize = 720;
/// Bisection width for the critical points.
pub const ROOT_TOL: f64 = 1e-12;

/// `w^alpha` on the branch with `arg w` in `(axis - pi, axis + pi]`.
pub fn pow_about(w: C64, alpha: f64, axis: f64) -> C64 {
    if w == ZERO {
        return ZERO;
    }
    C64::from_polar(w.norm().powf(alpha), alpha * arg_about(w, axis))
}

/// `((1 + Az)/(1 + Bz))^alpha` on the branch normalised by `0 -> 1`.
fn normalized_power(p: &JanowskiParams, z: C64) -> Result<C64> {
    let w = p.eval(z)?;
    if p.alpha() == 1.0 || w == ONE {
        return Ok(w);
    }
    Ok(pow_about(w, p.alpha(), p.axis()))
}

/// `(1 - gamma) ((1 + Az)/(1 + Bz))^alpha + gamma`.
pub fn eval_powered(p: &JanowskiParams, z: C64) -> Result<C64> {
    if z.norm() > 1.0 + EQ_TOL {
        return Err(JanowskiError::InvalidParameter(format!(
            "|z| = {} exceeds 1",
            z.norm()
        )));
    }
    if p.alpha() != 1.0 {
        p.require_argument_safe()?;
    }
    let g = p.gamma();
    Ok((ONE - g) * normalized_power(p, z)? + g)
}

/// Derivative of [`eval_powered`] in `z`.
pub fn eval_powered_derivative(p: &JanowskiParams, z: C64) -> Result<C64> {
    let w = p.eval(z)?;
    let dw = p.eval_derivative(z)?;
    let alpha = p.alpha();
    let inner = if alpha == 1.0 {
        dw
    } else {
        if w == ZERO {
            return Err(JanowskiError::BranchUndefined(
                "derivative of the power at w = 0".into(),
            ));
        }
        pow_about(w, alpha, p.axis()) * alpha * dw / w
    };
    Ok((ONE - p.gamma()) * inner)
}

/// Inverse of the powered, shifted map: `psi^{-1}(w) = (W - 1)/(A - B W)` with
/// `W = ((w - gamma)/(1 - gamma))^{1/alpha}` on the branch anchored at `1 -> 0`.
pub fn inverse_powered(p: &JanowskiParams, w: C64) -> Result<C64> {
    let normalized = (w - p.gamma()) / (ONE - p.gamma());
    let alpha = p.alpha();
    let first_order = if alpha == 1.0 {
        normalized
    } else {
        let axis = alpha * p.axis();
        if normalized != ZERO && (normalized * cis(-axis)).arg().abs() >= PI - 1e-12 {
            return Err(JanowskiError::BranchUndefined(format!(
                "{normalized} lies on the excluded ray arg = {:.6}",
                axis + PI
            )));
        }
        // inverse branch: arg in (alpha*axis - pi, alpha*axis + pi], divided by alpha
        if normalized == ZERO {
            ZERO
        } else {
            C64::from_polar(
                normalized.norm().powf(1.0 / alpha),
                arg_about(normalized, axis) / alpha,
            )
        }
    };
    Ok(p.inverse(first_order))
}

fn require_envelope_radius(p: &JanowskiParams, r: f64) -> Result<()> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "r = {r} outside (0, 1]"
        )));
    }
    if p.b().norm() * r >= 1.0 - EQ_TOL {
        return Err(JanowskiError::OutOfRange(format!(
            "|B| r = {} must be < 1 (unbounded boundary curve)",
            p.b().norm() * r
        )));
    }
    p.require_argument_safe()
}

/// The first-order circle `u(t) + i v(t) = C(r) + R(r) e^{it}`.
#[derive(Debug, Clone, Copy)]
struct Circle {
    center: C64,
    radius: f64,
    axis: f64,
    alpha: f64,
}

impl Circle {
    fn new(p: &JanowskiParams, r: f64) -> Result<Self> {
        let g = image_disk(p, r)?;
        Ok(Circle {
            center: g.center().expect("bounded radius"),
            radius: g.radius().expect("bounded radius"),
            axis: p.axis(),
            alpha: p.alpha(),
        })
    }

    fn point(&self, t: f64) -> C64 {
        self.center + cis(t) * self.radius
    }

    fn tangent(&self, t: f64) -> C64 {
        cis(t + FRAC_PI_2) * self.radius
    }

    fn value(&self, t: f64) -> C64 {
        pow_about(self.point(t), self.alpha, self.axis)
    }

    /// `d/dt (u + iv)^alpha`; zero at the (isolated) point where `u + iv = 0`.
    fn velocity(&self, t: f64) -> C64 {
        let w = self.point(t);
        if w.norm() < 1e-300 {
            return ZERO;
        }
        self.value(t) * self.alpha * self.tangent(t) / w
    }

    /// Residuals of the two critical-point equations, in cross-multiplied form
    /// normalised by `|w| |w'|`:
    /// `(uu' + vv') cos N - (uv' - vu') sin N` and `(uu' + vv') sin N + (uv' - vu') cos N`.
    fn residuals(&self, t: f64) -> (f64, f64) {
        let w = self.point(t);
        let dw = self.tangent(t);
        let radial = w.re * dw.re + w.im * dw.im;
        let angular = w.re * dw.im - w.im * dw.re;
        let n = self.alpha * arg_about(w, self.axis);
        let scale = w.norm() * dw.norm();
        (
            (radial * n.cos() - angular * n.sin()) / scale,
            (radial * n.sin() + angular * n.cos()) / scale,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveSample {
    pub t: f64,
    pub u: f64,
    pub v: f64,
    pub m: f64,
    pub n: f64,
}

/// Uniform samples of `t -> (u, v, M, N)` on `[0, 2 pi)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnvelopeCurve {
    pub r: f64,
    pub alpha: f64,
    pub samples: Vec<CurveSample>,
}

pub fn envelope_curve(p: &JanowskiParams, r: f64, n: usize) -> Result<EnvelopeCurve> {
    require_envelope_radius(p, r)?;
    let circle = Circle::new(p, r)?;
    let samples = (0..n)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / n as f64;
            let w = circle.point(t);
            CurveSample {
                t,
                u: w.re,
                v: w.im,
                m: w.norm().powf(p.alpha()),
                n: p.alpha() * arg_about(w, circle.axis),
            }
        })
        .collect();
    Ok(EnvelopeCurve {
        r,
        alpha: p.alpha(),
        samples,
    })
}

impl EnvelopeCurve {
    /// CSV with header `t,u,v,M,N`, 15 significant digits per value.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "t,u,v,M,N")?;
        for s in &self.samples {
            writeln!(
                out,
                "{:.14e},{:.14e},{:.14e},{:.14e},{:.14e}",
                s.t, s.u, s.v, s.m, s.n
            )?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("ascii output")
    }
}

/// Parameters on the boundary circle at which the extremes are attained.
///
/// `t1`/`t2` maximise `Re`/`Im`; `t1_min`/`t2_min` minimise them; `tau` is the
/// modulus-maximising parameter (the direction of the centre).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalPoints {
    pub t1: f64,
    pub t1_min: f64,
    pub t2: f64,
    pub t2_min: f64,
    pub tau: f64,
    /// Residual of the real-part critical equation at `t1`.
    pub residual_t1: f64,
    /// Residual of the imaginary-part critical equation at `t2`.
    pub residual_t2: f64,
    /// Set when the scan found no sign change and a dense-sampling argmax was used.
    pub fallback: bool,
}

fn normalize_t(t: f64) -> f64 {
    let mut t = t.rem_euclid(2.0 * PI);
    if t > 2.0 * PI - 1e-9 {
        t -= 2.0 * PI;
    }
    t
}

/// Max and min of `objective` over `candidates`, ties broken by smallest `t`.
fn extremes<F: Fn(f64) -> f64>(candidates: &[f64], objective: F) -> (f64, f64) {
    let mut sorted: Vec<f64> = candidates.iter().copied().map(normalize_t).collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut best_max = (f64::NEG_INFINITY, sorted[0]);
    let mut best_min = (f64::INFINITY, sorted[0]);
    for &t in &sorted {
        let v = objective(t);
        if v > best_max.0 {
            best_max = (v, t);
        }
        if v < best_min.0 {
            best_min = (v, t);
        }
    }
    (best_max.1, best_min.1)
}

fn critical_roots<F: Fn(f64) -> f64>(derivative: F) -> Vec<f64> {
    scan_roots(derivative, 0.0, 2.0 * PI, SCAN_CELLS, ROOT_TOL)
}

fn dense_candidates() -> Vec<f64> {
    (0..16 * SCAN_CELLS)
        .map(|k| 2.0 * PI * k as f64 / (16 * SCAN_CELLS) as f64)
        .collect()
}

/// Roots of the real- and imaginary-part critical equations on `|z| = r`.
///
/// Fails with `NoBracket` if the coarse scan finds no sign change for either
/// derivative.
pub fn critical_points(p: &JanowskiParams, r: f64) -> Result<CriticalPoints> {
    require_envelope_radius(p, r)?;
    let circle = Circle::new(p, r)?;
    let re_roots = critical_roots(|t| circle.velocity(t).re);
    let im_roots = critical_roots(|t| circle.velocity(t).im);
    if re_roots.is_empty() || im_roots.is_empty() {
        return Err(JanowskiError::NoBracket(
            "critical equations of Re/Im on the boundary circle".into(),
        ));
    }
    Ok(assemble_critical(&circle, re_roots, im_roots, false))
}

fn assemble_critical(
    circle: &Circle,
    mut re_candidates: Vec<f64>,
    mut im_candidates: Vec<f64>,
    fallback: bool,
) -> CriticalPoints {
    let tau = circle.center.arg();
    // the point nearest the origin is a candidate in its own right: when the
    // circle passes through 0 the derivative is singular there
    re_candidates.push(tau + PI);
    im_candidates.push(tau + PI);
    let (t1, t1_min) = extremes(&re_candidates, |t| circle.value(t).re);
    let (t2, t2_min) = extremes(&im_candidates, |t| circle.value(t).im);
    CriticalPoints {
        t1,
        t1_min,
        t2,
        t2_min,
        tau,
        residual_t1: circle.residuals(t1).0.abs(),
        residual_t2: circle.residuals(t2).1.abs(),
        fallback,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, other: &Interval, tol: f64) -> bool {
        self.lo <= other.lo + tol && other.hi <= self.hi + tol
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Bounds on `arg(h - gamma)` and `|h - gamma|` for the shifted map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftedView {
    pub gamma: C64,
    pub arg_interval: Interval,
    pub mod_interval: Interval,
}

/// Extremes of `arg`, `|.|`, `Re`, `Im` of `((1 + Az)/(1 + Bz))^alpha` on `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub r: f64,
    pub alpha: f64,
    pub arg_interval: Interval,
    pub mod_interval: Interval,
    pub re_interval: Interval,
    pub im_interval: Interval,
    pub critical: CriticalPoints,
    pub shifted: ShiftedView,
}

pub fn envelope_bounds(p: &JanowskiParams, r: f64) -> Result<BoundReport> {
    require_envelope_radius(p, r)?;
    let circle = Circle::new(p, r)?;
    let alpha = p.alpha();
    let critical = match critical_points(p, r) {
        Ok(c) => c,
        Err(JanowskiError::NoBracket(_)) => {
            assemble_critical(&circle, dense_candidates(), dense_candidates(), true)
        }
        Err(e) => return Err(e),
    };

    let ab = p.a_conj_b();
    let r2 = r * r;
    let num = (ONE - ab * r2).norm();
    let spread = (p.a() - p.b()).norm() * r;
    let scale = 1.0 - p.b().norm_sqr() * r2;

    let half_width = (spread / num).min(1.0).asin();
    let tau = (ONE - ab * r2).arg();
    let arg_interval = Interval::new(alpha * (tau - half_width), alpha * (tau + half_width));
    let mod_interval = Interval::new(
        ((num - spread).max(0.0) / scale).powf(alpha),
        ((num + spread) / scale).powf(alpha),
    );
    let re_interval = Interval::new(
        circle.value(critical.t1_min).re,
        circle.value(critical.t1).re,
    );
    let im_interval = Interval::new(
        circle.value(critical.t2_min).im,
        circle.value(critical.t2).im,
    );

    let g = p.gamma();
    let rot = (ONE - g).arg();
    let stretch = (ONE - g).norm();
    let shifted = ShiftedView {
        gamma: g,
        arg_interval: Interval::new(arg_interval.lo + rot, arg_interval.hi + rot),
        mod_interval: Interval::new(mod_interval.lo * stretch, mod_interval.hi * stretch),
    };

    Ok(BoundReport {
        r,
        alpha,
        arg_interval,
        mod_interval,
        re_interval,
        im_interval,
        critical,
        shifted,
    })
}

/// Closed sector `[lo, hi]` of arguments covered by `((1 + e^{im pi} z)/(1 - z))^alpha`,
/// with the equivalent half-plane `Re(e^{-i normal} w) > 0` of the first-order map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sector {
    pub lo: f64,
    pub hi: f64,
    pub normal: f64,
}

pub fn sector_image(m: f64, alpha: f64) -> Result<Sector> {
    if !(m > -1.0 && m < 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "m = {m} outside (-1, 1)"
        )));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "alpha = {alpha} outside (0, 1]"
        )));
    }
    Ok(Sector {
        lo: -alpha * (1.0 - m) * FRAC_PI_2,
        hi: alpha * (1.0 + m) * FRAC_PI_2,
        normal: m * FRAC_PI_2,
    })
}

/// Tilt `lambda` with `Re(e^{-i lambda} h) > 0` for every `h` subordinate to
/// `(1 + e^{im pi} z)/(1 - bz)`.
pub fn tilt_angle(b: f64, m: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&b) || !(-1.0..=1.0).contains(&m) {
        return Err(JanowskiError::InvalidParameter(format!(
            "b = {b} must lie in [0, 1] and m = {m} in [-1, 1]"
        )));
    }
    let rotated = cis(m * PI);
    if (rotated + b).norm() <= EQ_TOL {
        return Err(JanowskiError::DegenerateMap("b + e^{i m pi} = 0".into()));
    }
    Ok((b * (m * PI).sin()).atan2(b * (m * PI).cos() + 1.0))
}

/// Whether `W^{a1}` is subordinate to `W^{a2}` for `W = (1 + Az)/(1 + Bz)`.
pub fn alpha_nesting(p: &JanowskiParams, a1: f64, a2: f64) -> Result<bool> {
    for a in [a1, a2] {
        if !(a > 0.0 && a <= 1.0) {
            return Err(JanowskiError::InvalidParameter(format!(
                "power {a} outside (0, 1]"
            )));
        }
    }
    if p.a().norm() > 1.0 + EQ_TOL {
        return Err(JanowskiError::InvalidParameter(format!(
            "|A| = {} exceeds 1",
            p.a().norm()
        )));
    }
    Ok(a1 <= a2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmath::c;

    fn params(a: C64, b: C64, alpha: f64) -> JanowskiParams {
        JanowskiParams::new(a, b).unwrap().powered(alpha).unwrap()
    }

    fn angle_close(a: f64, b: f64, tol: f64) -> bool {
        let d = (a - b).rem_euclid(2.0 * PI);
        d < tol || 2.0 * PI - d < tol
    }

    #[test]
    fn eval_powered_examples() {
        let p = params(c(0.3, 0.4), c(-0.5, 0.2), 0.7);
        assert_eq!(eval_powered(&p, ZERO).unwrap(), ONE);

        let p = params(c(1.0, 0.0), ZERO, 0.5);
        for &r in &[0.1, 0.5, 0.9] {
            let h = eval_powered(&p, c(r, 0.0)).unwrap();
            assert!((h - c((1.0f64 + r).sqrt(), 0.0)).norm() < 1e-15);
        }

        let p = params(c(1.0, 0.0), c(-1.0, 0.0), 0.5);
        let h = eval_powered(&p, c(0.5, 0.0)).unwrap();
        let via_log = (c(3.0, 0.0).ln() * 0.5).exp();
        assert!((h - c(3f64.sqrt(), 0.0)).norm() < 1e-15);
        assert!((h - via_log).norm() < 1e-15);
    }

    #[test]
    fn eval_powered_shift_and_branch_errors() {
        let p = params(c(0.5, 0.0), ZERO, 0.5).shifted(c(0.25, 0.0)).unwrap();
        let h = eval_powered(&p, c(0.5, 0.0)).unwrap();
        assert!((h - c(0.75 * 1.25f64.sqrt() + 0.25, 0.0)).norm() < 1e-15);
        let unsafe_map = JanowskiParams::new(c(1.5, 0.0), ZERO).unwrap();
        assert!(eval_powered(&unsafe_map, c(0.5, 0.0)).is_ok());
        assert!(unsafe_map.powered(0.5).is_err());
    }

    #[test]
    fn derivative_matches_central_difference() {
        let p = params(c(0.6, -0.3), c(0.2, 0.5), 0.45)
            .shifted(c(-0.4, 0.3))
            .unwrap();
        let z = c(0.3, -0.4);
        let h = 1e-6;
        let fd = (eval_powered(&p, z + h).unwrap() - eval_powered(&p, z - h).unwrap()) / (2.0 * h);
        assert!((eval_powered_derivative(&p, z).unwrap() - fd).norm() < 1e-8);
    }

    #[test]
    fn inverse_round_trip() {
        let p = params(c(-0.7, 0.5), c(0.3, -0.8), 0.35)
            .shifted(c(0.2, -0.6))
            .unwrap();
        for k in 0..32 {
            let z = cis(k as f64 * 0.2) * 0.93;
            let w = eval_powered(&p, z).unwrap();
            assert!((inverse_powered(&p, w).unwrap() - z).norm() < 1e-12);
        }
    }

    #[test]
    fn square_root_of_one_plus_z() {
        let p = params(c(1.0, 0.0), ZERO, 0.5);
        let rep = envelope_bounds(&p, 1.0).unwrap();
        assert!(angle_close(rep.critical.t1, 0.0, 1e-9));
        assert!(angle_close(rep.critical.t2, 2.0 * PI / 3.0, 1e-9));
        assert!(rep.re_interval.lo.abs() < 1e-6);
        assert!((rep.re_interval.hi - 2f64.sqrt()).abs() < 1e-6);
        assert!((rep.im_interval.lo + 0.5).abs() < 1e-6);
        assert!((rep.im_interval.hi - 0.5).abs() < 1e-6);
        assert!((rep.arg_interval.hi - PI / 4.0).abs() < 1e-12);
        assert!((rep.arg_interval.lo + PI / 4.0).abs() < 1e-12);
        assert!(rep.mod_interval.lo.abs() < 1e-12);
        assert!((rep.mod_interval.hi - 2f64.sqrt()).abs() < 1e-12);
        assert!(rep.critical.residual_t1 < 1e-10);
        assert!(rep.critical.residual_t2 < 1e-10);
    }

    #[test]
    fn real_parameters_have_real_axis_extremes() {
        let p = JanowskiParams::new(c(0.5, 0.0), c(-0.5, 0.0)).unwrap();
        let rep = envelope_bounds(&p, 0.5).unwrap();
        assert!(angle_close(rep.critical.t1, 0.0, 1e-9));
        assert!((rep.re_interval.lo - 0.6).abs() < 1e-12);
        assert!((rep.re_interval.hi - 5.0 / 3.0).abs() < 1e-12);
        assert!((rep.mod_interval.lo - 0.6).abs() < 1e-12);
        assert!((rep.mod_interval.hi - 5.0 / 3.0).abs() < 1e-12);
        assert!((rep.arg_interval.hi - (8.0f64 / 17.0).asin()).abs() < 1e-12);
        // alpha = 1: Im extremes are C.im +- R
        assert!((rep.im_interval.hi - 8.0 / 15.0).abs() < 1e-12);
    }

    #[test]
    fn small_radius_collapses_to_one() {
        let p = params(c(0.4, 0.6), c(-0.3, 0.1), 0.6);
        let rep = envelope_bounds(&p, 1e-9).unwrap();
        for iv in [rep.mod_interval, rep.re_interval] {
            assert!((iv.lo - 1.0).abs() < 1e-8 && (iv.hi - 1.0).abs() < 1e-8);
        }
        for iv in [rep.arg_interval, rep.im_interval] {
            assert!(iv.lo.abs() < 1e-8 && iv.hi.abs() < 1e-8);
        }
    }

    #[test]
    fn envelope_radius_restrictions() {
        let p = params(c(1.0, 0.0), c(-1.0, 0.0), 0.5);
        assert!(matches!(
            envelope_bounds(&p, 1.0),
            Err(JanowskiError::OutOfRange(_))
        ));
        assert!(envelope_bounds(&p, 0.99).is_ok());
        assert!(envelope_bounds(&p, 0.0).is_err());
        let unsafe_map = JanowskiParams::new(c(1.5, 0.0), ZERO).unwrap();
        assert!(matches!(
            envelope_bounds(&unsafe_map, 0.5),
            Err(JanowskiError::BranchUndefined(_))
        ));
    }

    #[test]
    fn critical_point_residuals() {
        let p = params(c(0.0, 0.5), ZERO, 0.5);
        let cp = critical_points(&p, 0.5).unwrap();
        assert!(cp.residual_t1 < 1e-10);
        assert!(cp.residual_t2 < 1e-10);
        assert!(!cp.fallback);
    }

    #[test]
    fn shifted_view_rotates_and_scales() {
        let g = c(0.5, 0.5);
        let p = params(c(0.5, 0.0), ZERO, 0.5).shifted(g).unwrap();
        let rep = envelope_bounds(&p, 0.5).unwrap();
        let rot = (ONE - g).arg();
        assert!((rep.shifted.arg_interval.lo - rep.arg_interval.lo - rot).abs() < 1e-15);
        assert!((rep.shifted.mod_interval.hi - rep.mod_interval.hi * (ONE - g).norm()).abs() < 1e-15);
    }

    #[test]
    fn sector_examples() {
        let s = sector_image(0.0, 1.0).unwrap();
        assert!((s.lo + FRAC_PI_2).abs() < 1e-15 && (s.hi - FRAC_PI_2).abs() < 1e-15);
        let s = sector_image(0.0, 0.3).unwrap();
        assert!((s.lo + 0.3 * FRAC_PI_2).abs() < 1e-15 && (s.hi - 0.3 * FRAC_PI_2).abs() < 1e-15);
        let s = sector_image(0.5, 0.5).unwrap();
        assert!((s.lo + PI / 8.0).abs() < 1e-15 && (s.hi - 3.0 * PI / 8.0).abs() < 1e-15);
        assert!((s.normal - PI / 4.0).abs() < 1e-15);
        assert!(sector_image(1.0, 0.5).is_err());
    }

    #[test]
    fn sector_matches_envelope_near_unit_radius() {
        let p = params(c(0.0, 1.0), c(-1.0, 0.0), 0.5);
        let rep = envelope_bounds(&p, 1.0 - 1e-9).unwrap();
        let s = sector_image(0.5, 0.5).unwrap();
        assert!((rep.arg_interval.lo - s.lo).abs() < 1e-4);
        assert!((rep.arg_interval.hi - s.hi).abs() < 1e-4);
    }

    #[test]
    fn tilt_examples() {
        assert_eq!(tilt_angle(1.0, 0.0).unwrap(), 0.0);
        assert!((tilt_angle(1.0, 0.5).unwrap() - PI / 4.0).abs() < 1e-15);
        for &m in &[-0.8, 0.1, 0.7] {
            assert_eq!(tilt_angle(0.0, m).unwrap(), 0.0);
        }
        assert!(matches!(
            tilt_angle(1.0, 1.0),
            Err(JanowskiError::DegenerateMap(_))
        ));
    }

    #[test]
    fn nesting_examples() {
        let p = JanowskiParams::new(c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert!(alpha_nesting(&p, 0.4, 0.4).unwrap());
        assert!(alpha_nesting(&p, 0.25, 0.5).unwrap());
        assert!(!alpha_nesting(&p, 0.5, 0.25).unwrap());
        assert!(alpha_nesting(&p, 0.0, 0.5).is_err());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let p = params(c(0.5, 0.2), c(-0.2, 0.0), 0.5);
        let curve = envelope_curve(&p, 0.5, 8).unwrap();
        let csv = curve.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,u,v,M,N"));
        let row: Vec<f64> = lines
            .next()
            .unwrap()
            .split(',')
            .map(|x| x.parse().unwrap())
            .collect();
        assert_eq!(row.len(), 5);
        assert_eq!(row[0], 0.0);
        assert_eq!(csv.lines().count(), 9);
    }
}
