//! Brute-force checks on boundary samples: inverse-map subordination,
//! sampled extrema, continuous phase, inverse tracking and polygon containment.

use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

use crate::cmath::{arg_about, cis, is_finite, wrap_angle, C64, ZERO};
use crate::envelope::{inverse_powered, Interval};
use crate::error::{JanowskiError, Result};
use crate::moebius::JanowskiParams;
use crate::radius::RadiusProblem;

/// Default sample count for the bound oracles.
pub const BOUND_SAMPLES: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SubordinationCheck {
    pub holds: bool,
    /// `max |psi^{-1}(w)|` over the samples.
    pub max_modulus: f64,
    /// `r - max_modulus`.
    pub margin: f64,
}

/// Whether every sample lies in the image of `|z| <= r` under `target`,
/// decided by `max |psi^{-1}(w)| <= r + tol`.
pub fn verify_subordination(
    samples: &[C64],
    target: &JanowskiParams,
    r: f64,
    tol: f64,
) -> Result<SubordinationCheck> {
    let max_modulus = samples
        .par_iter()
        .map(|&w| inverse_powered(target, w).map(|z| z.norm()))
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))?;
    Ok(SubordinationCheck {
        holds: max_modulus <= r + tol,
        max_modulus,
        margin: r - max_modulus,
    })
}

/// Sampled extrema of the continuous argument, modulus, real and imaginary
/// parts of `((1 + Az)/(1 + Bz))^alpha` on `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampledBounds {
    pub r: f64,
    pub samples: usize,
    pub arg_interval: Interval,
    pub mod_interval: Interval,
    pub re_interval: Interval,
    pub im_interval: Interval,
}

pub fn empirical_bounds(p: &JanowskiParams, r: f64, n: usize) -> Result<SampledBounds> {
    p.require_argument_safe()?;
    if !(r > 0.0 && r <= 1.0) || n == 0 {
        return Err(JanowskiError::InvalidParameter(format!(
            "need r in (0, 1] and n > 0 (got {r}, {n})"
        )));
    }
    let alpha = p.alpha();
    let axis = p.axis();
    let fold = |acc: [f64; 8], w: C64| {
        let arg = alpha * arg_about(w, axis);
        let m = w.norm().powf(alpha);
        let h = C64::from_polar(m, arg);
        [
            acc[0].min(arg),
            acc[1].max(arg),
            acc[2].min(m),
            acc[3].max(m),
            acc[4].min(h.re),
            acc[5].max(h.re),
            acc[6].min(h.im),
            acc[7].max(h.im),
        ]
    };
    let empty = [
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    ];
    let ext = (0..n)
        .into_par_iter()
        .map(|k| p.eval(cis(2.0 * PI * k as f64 / n as f64) * r))
        .try_fold(|| empty, |acc, w| w.map(|w| fold(acc, w)))
        .try_reduce(
            || empty,
            |a, b| {
                let mut out = a;
                for i in 0..8 {
                    out[i] = if i % 2 == 0 { a[i].min(b[i]) } else { a[i].max(b[i]) };
                }
                Ok(out)
            },
        )?;
    Ok(SampledBounds {
        r,
        samples: n,
        arg_interval: Interval::new(ext[0], ext[1]),
        mod_interval: Interval::new(ext[2], ext[3]),
        re_interval: Interval::new(ext[4], ext[5]),
        im_interval: Interval::new(ext[6], ext[7]),
    })
}

/// Whether the source boundary at radius `r` lies inside the target image of
/// the unit disk (inverse-map test against the target).
pub fn radius_containment(problem: &RadiusProblem, r: f64, n: usize) -> Result<SubordinationCheck> {
    let source = problem.source()?;
    let target = problem.target()?;
    let samples = (0..n)
        .map(|k| crate::envelope::eval_powered(&source, cis(2.0 * PI * k as f64 / n as f64) * r))
        .collect::<Result<Vec<_>>>()?;
    verify_subordination(&samples, &target, 1.0, 0.0)
}

/// Radial steps used to anchor the phase before going round the circle.
pub const RADIAL_STEPS: usize = 512;

/// Continuous argument of `f` on `|z| = 1` at `n` equally spaced angles.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseTrace {
    pub args: Vec<f64>,
    /// Net change of the argument around the circle, in turns.
    pub winding: i64,
}

impl PhaseTrace {
    pub fn closed(&self) -> bool {
        self.winding == 0
    }

    pub fn extent(&self) -> Interval {
        let lo = self.args.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = self.args.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::new(lo, hi)
    }
}

/// Walks from `f(0)` (principal argument) along `[0, 1]` and then once round
/// the unit circle, unwrapping as it goes.  `None` if `f` vanishes or is not
/// finite at a visited point.
pub fn phase_on_circle<F: Fn(C64) -> C64>(f: F, n: usize) -> Option<PhaseTrace> {
    let start = f(ZERO);
    if start == ZERO || !is_finite(start) {
        return None;
    }
    let mut prev = start;
    let mut arg = start.arg();
    let step = |w: C64, prev: &mut C64, arg: &mut f64| -> Option<()> {
        if w == ZERO || !is_finite(w) {
            return None;
        }
        *arg += wrap_angle((w / *prev).arg());
        *prev = w;
        Some(())
    };
    for k in 1..=RADIAL_STEPS {
        step(f(C64::new(k as f64 / RADIAL_STEPS as f64, 0.0)), &mut prev, &mut arg)?;
    }
    let mut args = Vec::with_capacity(n);
    args.push(arg);
    let first = arg;
    for k in 1..=n {
        step(f(cis(2.0 * PI * k as f64 / n as f64)), &mut prev, &mut arg)?;
        if k < n {
            args.push(arg);
        }
    }
    let winding = ((arg - first) / (2.0 * PI)).round() as i64;
    Some(PhaseTrace { args, winding })
}

/// Outcome of continuing `zeta` with `h(zeta) = F(z)` from `zeta(0) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InverseTrack {
    /// Continuation succeeded along the whole path and closed up round the circle.
    pub complete: bool,
    pub max_modulus: f64,
}

const NEWTON_ITERS: usize = 40;
const MAX_SPLIT: u32 = 24;

fn newton<H, D>(h: &H, dh: &D, target: C64, guess: C64) -> Option<C64>
where
    H: Fn(C64) -> Option<C64>,
    D: Fn(C64) -> Option<C64>,
{
    let mut zeta = guess;
    let scale = target.norm().max(1.0);
    for _ in 0..NEWTON_ITERS {
        let residual = h(zeta)? - target;
        if residual.norm() < 1e-12 * scale {
            return Some(zeta);
        }
        let d = dh(zeta)?;
        if d == ZERO || !is_finite(d) {
            return None;
        }
        let step = residual / d;
        // reject steps that jump far from the continuation
        if step.norm() > 0.5 {
            return None;
        }
        zeta -= step;
    }
    let residual = h(zeta)? - target;
    (residual.norm() < 1e-10 * scale).then_some(zeta)
}

/// Continue `zeta` from `z0` to `z1` along the straight segment, halving the
/// step when Newton fails or jumps.
fn continue_segment<H, D, F>(h: &H, dh: &D, f: &F, z0: C64, z1: C64, zeta0: C64, depth: u32) -> Option<C64>
where
    H: Fn(C64) -> Option<C64>,
    D: Fn(C64) -> Option<C64>,
    F: Fn(C64) -> C64,
{
    if let Some(z) = newton(h, dh, f(z1), zeta0) {
        // accept only continuations that stay local
        if (z - zeta0).norm() < 0.1 {
            return Some(z);
        }
    }
    if depth >= MAX_SPLIT {
        return None;
    }
    let mid = (z0 + z1) * 0.5;
    let zm = continue_segment(h, dh, f, z0, mid, zeta0, depth + 1)?;
    continue_segment(h, dh, f, mid, z1, zm, depth + 1)
}

/// Tracks `zeta(z) = h^{-1}(F(z))` along `[0, 1]` and round the unit circle
/// at `n` points.  `h` and `dh` return `None` outside their domain.
///
/// A complete track with `max_modulus < 1` exhibits `F = h(zeta)` with
/// `|zeta| < 1` on the boundary, i.e. `F < h`.
pub fn track_inverse<H, D, F>(h: H, dh: D, f: F, n: usize) -> InverseTrack
where
    H: Fn(C64) -> Option<C64>,
    D: Fn(C64) -> Option<C64>,
    F: Fn(C64) -> C64,
{
    let failed = |m: f64| InverseTrack {
        complete: false,
        max_modulus: m,
    };
    let mut zeta = ZERO;
    let mut z_prev = ZERO;
    let mut max_modulus: f64 = 0.0;
    match h(ZERO) {
        Some(h0) if (h0 - f(ZERO)).norm() < 1e-12 * h0.norm().max(1.0) => {}
        _ => return failed(f64::INFINITY),
    }
    let path = (1..=RADIAL_STEPS)
        .map(|k| C64::new(k as f64 / RADIAL_STEPS as f64, 0.0))
        .chain((1..=n).map(|k| cis(2.0 * PI * k as f64 / n as f64)));
    let mut anchor = None;
    for (i, z) in path.enumerate() {
        match continue_segment(&h, &dh, &f, z_prev, z, zeta, 0) {
            Some(next) => zeta = next,
            None => return failed(max_modulus.max(zeta.norm())),
        }
        max_modulus = max_modulus.max(zeta.norm());
        if max_modulus >= 1.0 {
            return failed(max_modulus);
        }
        if i + 1 == RADIAL_STEPS {
            anchor = Some(zeta);
        }
        z_prev = z;
    }
    let closed = anchor.map_or(false, |a| (a - zeta).norm() < 1e-8);
    InverseTrack {
        complete: closed,
        max_modulus,
    }
}

/// Winding number of the closed polygon `vertices` about `w`.
pub fn winding_number(vertices: &[C64], w: C64) -> i64 {
    let mut winding = 0;
    for (&a, &b) in vertices.iter().zip(vertices.iter().cycle().skip(1)) {
        let side = (b - a).re * (w - a).im - (w - a).re * (b - a).im;
        if a.im <= w.im {
            if b.im > w.im && side > 0.0 {
                winding += 1;
            }
        } else if b.im <= w.im && side < 0.0 {
            winding -= 1;
        }
    }
    winding
}

/// Distance from `w` to the closed polygon.
pub fn polygon_distance(vertices: &[C64], w: C64) -> f64 {
    vertices
        .iter()
        .zip(vertices.iter().cycle().skip(1))
        .map(|(&a, &b)| {
            let d = b - a;
            let t = if d == ZERO {
                0.0
            } else {
                (((w - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0)
            };
            (a + d * t - w).norm_sqr()
        })
        .fold(f64::INFINITY, f64::min)
        .sqrt()
}

/// Whether every point lies inside the polygon or within `tol` of its edges;
/// the margin is the smallest signed distance (negative outside).
pub fn inside_polygon(vertices: &[C64], points: &[C64], tol: f64) -> (bool, f64) {
    let margin = points
        .par_iter()
        .map(|&w| {
            let d = polygon_distance(vertices, w);
            if winding_number(vertices, w) != 0 {
                d
            } else {
                -d
            }
        })
        .reduce(|| f64::INFINITY, f64::min);
    (margin >= -tol, margin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmath::{c, ONE};
    use crate::envelope::{envelope_bounds, eval_powered};

    fn circle_samples(p: &JanowskiParams, r: f64, n: usize) -> Vec<C64> {
        (0..n)
            .map(|k| eval_powered(p, cis(2.0 * PI * k as f64 / n as f64) * r).unwrap())
            .collect()
    }

    #[test]
    fn subordination_examples() {
        let p = JanowskiParams::new(c(0.4, 0.3), c(-0.2, 0.6))
            .unwrap()
            .powered(0.6)
            .unwrap()
            .shifted(c(0.1, -0.2))
            .unwrap();
        let own = verify_subordination(&circle_samples(&p, 0.8, 512), &p, 0.8, 1e-9).unwrap();
        assert!(own.holds && own.margin.abs() < 1e-9);
        let half = verify_subordination(&circle_samples(&p, 0.5, 512), &p, 1.0, 0.0).unwrap();
        assert!(half.holds && (half.max_modulus - 0.5).abs() < 1e-12);

        let disk = JanowskiParams::new(ONE, ZERO).unwrap();
        let scaled: Vec<C64> = circle_samples(&disk, 0.5, 2048).iter().map(|w| w * 1.05).collect();
        let check = verify_subordination(&scaled, &disk, 0.5, 1e-9).unwrap();
        assert!(!check.holds);
        assert!((check.max_modulus - 0.575).abs() < 1e-6);
    }

    #[test]
    fn empirical_matches_square_root_case() {
        let p = JanowskiParams::new(ONE, ZERO).unwrap().powered(0.5).unwrap();
        let s = empirical_bounds(&p, 1.0, BOUND_SAMPLES).unwrap();
        assert!(s.re_interval.lo.abs() < 1e-4 && (s.re_interval.hi - 2f64.sqrt()).abs() < 1e-4);
        assert!((s.im_interval.lo + 0.5).abs() < 1e-4 && (s.im_interval.hi - 0.5).abs() < 1e-4);
        let tiny = empirical_bounds(&p, 1e-9, 64).unwrap();
        assert!((tiny.mod_interval.hi - 1.0).abs() < 1e-8 && tiny.arg_interval.hi.abs() < 1e-8);
    }

    #[test]
    fn empirical_matches_envelope() {
        let p = JanowskiParams::new(c(0.5, -0.6), c(0.3, 0.4)).unwrap().powered(0.7).unwrap();
        let s = empirical_bounds(&p, 0.7, BOUND_SAMPLES).unwrap();
        let e = envelope_bounds(&p, 0.7).unwrap();
        for (a, b) in [
            (s.arg_interval, e.arg_interval),
            (s.mod_interval, e.mod_interval),
            (s.re_interval, e.re_interval),
            (s.im_interval, e.im_interval),
        ] {
            assert!((a.lo - b.lo).abs() < 1e-5 && (a.hi - b.hi).abs() < 1e-5, "{a:?} {b:?}");
        }
    }

    #[test]
    fn phase_detects_winding() {
        let t = phase_on_circle(|z| ONE + z * 0.5, 256).unwrap();
        assert!(t.closed());
        assert!(t.extent().hi <= (0.5f64).asin() + 1e-12);
        let t = phase_on_circle(|z| z * 3.0 - ONE, 256).unwrap();
        assert_eq!(t.winding, 1);
        assert!(phase_on_circle(|z| z - ONE, 64).is_none());
    }

    #[test]
    fn tracker_inverts_moebius() {
        let h = |z: C64| Some((ONE + z) / (ONE - z * 0.5));
        let dh = |z: C64| Some(c(1.5, 0.0) / ((ONE - z * 0.5) * (ONE - z * 0.5)));
        let inside = track_inverse(h, dh, |z| (ONE + z * 0.7) / (ONE - z * 0.35), 1024);
        assert!(inside.complete && (inside.max_modulus - 0.7).abs() < 1e-9);
        let outside = track_inverse(h, dh, |z| (ONE + z * 1.2) / (ONE - z * 0.6), 1024);
        assert!(!outside.complete);
    }

    #[test]
    fn polygon_tests() {
        let square = [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)];
        assert_eq!(winding_number(&square, c(0.5, 0.5)), 1);
        assert_eq!(winding_number(&square, c(1.5, 0.5)), 0);
        let (ok, m) = inside_polygon(&square, &[c(0.5, 0.5), c(0.9, 0.1)], 0.0);
        assert!(ok && (m - 0.1).abs() < 1e-15);
        let (ok, m) = inside_polygon(&square, &[c(1.00005, 0.5)], 1e-4);
        assert!(ok && m < 0.0);
    }
}
