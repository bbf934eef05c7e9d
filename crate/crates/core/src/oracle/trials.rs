//! Implication trials: build `p` from a theorem's dominant and a random Schwarz
//! function, test the hypothesis on the boundary, then the conclusion.
//!
//! Every trial composes with `omega(0.95 z)` so that all functions are analytic
//! on the closed disk and boundary samples are finite.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use super::sampling::{inside_polygon, phase_on_circle, track_inverse, verify_subordination};
use super::schwarz::{random_schwarz, seeded_rng, SchwarzPoly};
use crate::cmath::{c, cis, is_finite, C64, I, ONE, ZERO};
use crate::envelope::{pow_about, sector_image, tilt_angle};
use crate::error::{JanowskiError, Result};
use crate::moebius::JanowskiParams;
use crate::quadrature::Integrator;
use crate::sector::{eta_infimum, reciprocal_order_sector, thm1_params, thm2_params};
use crate::special::{
    dominant_h, dominant_h_derivative, dominant_spec_linear, silverman_inclusion, DominantSpec,
};

/// Boundary samples for hypotheses and conclusions.
pub const TRIAL_SAMPLES: usize = 4096;
/// Tolerance on conclusions (radians for sector bounds, modulus for inverse maps).
pub const CONCLUSION_TOL: f64 = 1e-4;
/// Radius at which the random Schwarz function is sampled.
pub const SHRINK: f64 = 0.95;
/// Stream of the seeded generator used for theorem parameters.
pub const PARAMS_STREAM: u64 = 1;

const RADIAL_STEPS: usize = 512;
const MAX_DRAWS: usize = 10_000;
/// Every `POLYGON_STRIDE`-th boundary value of `p` is tested against the `q` polygon.
const POLYGON_STRIDE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T3_3,
    T3_6,
    T5_4,
    T5_5,
    T5_7,
    C5_12,
    T5_10,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::T3_3,
        TheoremId::T3_6,
        TheoremId::T5_4,
        TheoremId::T5_5,
        TheoremId::T5_7,
        TheoremId::C5_12,
        TheoremId::T5_10,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T3_3 => "T3.3",
            TheoremId::T3_6 => "T3.6",
            TheoremId::T5_4 => "T5.4",
            TheoremId::T5_5 => "T5.5",
            TheoremId::T5_7 => "T5.7",
            TheoremId::C5_12 => "C5.12",
            TheoremId::T5_10 => "T5.10",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = JanowskiError;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| JanowskiError::InvalidTheoremId(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Parameters of one trial, one variant per theorem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TrialParams {
    /// `f'/g' => f/g` with `g(z) = z`.
    Ratio { alpha: f64, m: f64, beta: f64 },
    /// `p^alpha (1 + lambda zp'/p)^gamma => p`, `lambda(z) = lambda0 (1 + epsilon z)`.
    Power {
        alpha: f64,
        beta: f64,
        gamma: f64,
        m: f64,
        lambda0: C64,
        epsilon: f64,
    },
    /// `|zp'/p^2| < beta => p < ((1 + Az)/(1 - bz))^alpha`.
    Silverman { a: C64, b: f64, alpha: f64, beta: f64 },
    /// `|zq'| < beta => |Arg(q - alpha)| < asin(beta/(1 - alpha))`.
    Reciprocal { alpha: f64, beta: f64 },
    /// `mu p^alpha (delta + rho p) + eta zp' p^{alpha - 1} < h => p < W^gamma`.
    Dominant { spec: DominantSpec },
    /// `(1 - lambda) p + lambda zp' < h => p < W^gamma`.
    Linear { lambda: f64, m: f64, b: f64, gamma: f64 },
    /// `1 + zf''/f' < W^alpha => zf'/f < q`, `W = (1 + Az)/(1 - bz)`.
    BriotBouquet { a: C64, b: f64, alpha: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub theorem: TheoremId,
    pub seed: u64,
    pub degree: usize,
    pub kappa: f64,
    pub params: TrialParams,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    /// Distance inside the hypothesis region (negative outside); `None` when
    /// the hypothesis expression could not be evaluated.
    pub hypothesis_margin: Option<f64>,
    pub conclusion_margin: Option<f64>,
    pub violation: bool,
}

impl TrialReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("trial reports serialise")
    }
}

struct Outcome {
    holds: bool,
    margin: Option<f64>,
}

impl Outcome {
    fn failed() -> Self {
        Outcome {
            holds: false,
            margin: None,
        }
    }

    fn from_margin(margin: f64, tol: f64) -> Self {
        Outcome {
            holds: margin >= -tol,
            margin: Some(margin),
        }
    }
}

fn unit_circle(n: usize) -> impl Iterator<Item = C64> {
    (0..n).map(move |k| cis(2.0 * PI * k as f64 / n as f64))
}

fn random_disk<R: Rng>(rng: &mut R, radius: f64) -> C64 {
    let r = radius * rng.gen::<f64>().sqrt();
    C64::from_polar(r, rng.gen_range(-PI..PI))
}

/// Margin of the continuous phase of `f` against `[lo, hi]`.
fn phase_outcome<F: Fn(C64) -> C64>(f: F, scale: f64, lo: f64, hi: f64, tol: f64) -> Outcome {
    match phase_on_circle(f, TRIAL_SAMPLES) {
        Some(trace) if trace.closed() => {
            let ext = trace.extent();
            Outcome::from_margin((scale * ext.lo - lo).min(hi - scale * ext.hi), tol)
        }
        _ => Outcome::failed(),
    }
}

fn combined_phase_outcome<F, G>(f: F, a: f64, g: G, b: f64, lo: f64, hi: f64, tol: f64) -> Outcome
where
    F: Fn(C64) -> C64,
    G: Fn(C64) -> C64,
{
    let (Some(tf), Some(tg)) = (phase_on_circle(f, TRIAL_SAMPLES), phase_on_circle(g, TRIAL_SAMPLES))
    else {
        return Outcome::failed();
    };
    if !tf.closed() || !tg.closed() {
        return Outcome::failed();
    }
    let margin = tf
        .args
        .iter()
        .zip(&tg.args)
        .map(|(x, y)| {
            let v = a * x + b * y;
            (v - lo).min(hi - v)
        })
        .fold(f64::INFINITY, f64::min);
    Outcome::from_margin(margin, tol)
}

fn subordination_outcome(samples: &[C64], target: &JanowskiParams, tol: f64) -> Outcome {
    if samples.iter().any(|w| !is_finite(*w)) {
        return Outcome::failed();
    }
    match verify_subordination(samples, target, 1.0, 0.0) {
        Ok(check) => Outcome::from_margin(check.margin, tol),
        Err(_) => Outcome::failed(),
    }
}

fn dominant_outcome<F: Fn(C64) -> C64>(spec: &DominantSpec, f: F) -> Outcome {
    let inside = |z: C64| z.norm() < 1.0;
    let h = |z: C64| inside(z).then(|| dominant_h(spec, z).ok()).flatten();
    let dh = |z: C64| inside(z).then(|| dominant_h_derivative(spec, z).ok()).flatten();
    let track = track_inverse(h, dh, f, TRIAL_SAMPLES);
    if track.complete {
        Outcome::from_margin(1.0 - track.max_modulus, 0.0)
    } else {
        Outcome {
            holds: false,
            margin: track.max_modulus.is_finite().then_some(1.0 - track.max_modulus),
        }
    }
}

/// `W'/W` for `W = (1 + Aw)/(1 - bw)`.
fn log_derivative(a: C64, b: f64, w: C64) -> C64 {
    a / (ONE + a * w) + b / (ONE - w * b)
}

type Rhs<'a> = dyn Fn(f64, [C64; 2]) -> [C64; 2] + 'a;

fn rk4(f: &Rhs, t: f64, h: f64, y: [C64; 2]) -> [C64; 2] {
    let add = |y: [C64; 2], k: [C64; 2], s: f64| [y[0] + k[0] * s, y[1] + k[1] * s];
    let k1 = f(t, y);
    let k2 = f(t + h / 2.0, add(y, k1, h / 2.0));
    let k3 = f(t + h / 2.0, add(y, k2, h / 2.0));
    let k4 = f(t + h, add(y, k3, h));
    [
        y[0] + (k1[0] + k2[0] * 2.0 + k3[0] * 2.0 + k4[0]) * (h / 6.0),
        y[1] + (k1[1] + k2[1] * 2.0 + k3[1] * 2.0 + k4[1]) * (h / 6.0),
    ]
}

/// `[log f'(1), f(1)]` along `[0, 1]`: `L' = (P - 1)/s`, `f' = e^L`.
fn ray_state<P: Fn(C64) -> C64>(big_p: &P) -> [C64; 2] {
    let d0 = 1e-5;
    let slope = (big_p(c(d0, 0.0)) - big_p(c(-d0, 0.0))) / (2.0 * d0);
    let ray = |s: f64, y: [C64; 2]| -> [C64; 2] {
        let dl = if s == 0.0 {
            slope
        } else {
            (big_p(c(s, 0.0)) - ONE) / s
        };
        [dl, y[0].exp()]
    };
    let mut y = [ZERO, ZERO];
    let h = 1.0 / RADIAL_STEPS as f64;
    for k in 0..RADIAL_STEPS {
        y = rk4(&ray, k as f64 * h, h, y);
    }
    y
}

/// `zf'/f` at `z = 1` for the normalised `f` with `1 + zf''/f' = P`.
pub fn starlike_ray<P: Fn(C64) -> C64>(big_p: P) -> C64 {
    let y = ray_state(&big_p);
    y[0].exp() / y[1]
}

/// Boundary values of `zf'/f` for the normalised `f` with `1 + zf''/f' = P`,
/// at `n` equally spaced points of the unit circle.
///
/// Integrates `L = log f'` and `f` by RK4 along `[0, 1]` and then round the
/// circle (`dL/dt = i (P - 1)`, `df/dt = i z e^L`).
pub fn starlike_boundary<P: Fn(C64) -> C64>(big_p: P, n: usize) -> Option<Vec<C64>> {
    let mut y = ray_state(&big_p);
    let circle = |t: f64, y: [C64; 2]| -> [C64; 2] {
        let z = cis(t);
        [I * (big_p(z) - ONE), I * z * y[0].exp()]
    };
    let h = 2.0 * PI / n as f64;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let z = cis(k as f64 * h);
        let p = z * y[0].exp() / y[1];
        if !is_finite(p) {
            return None;
        }
        out.push(p);
        y = rk4(&circle, k as f64 * h, h, y);
    }
    Some(out)
}

fn mismatch(theorem: TheoremId, params: &TrialParams) -> JanowskiError {
    JanowskiError::InvalidParameter(format!("parameters {params:?} do not belong to {theorem}"))
}

/// Runs one trial with explicit parameters, Schwarz function and exponent
/// multiplier `kappa`.  The trial function is a dominant raised to `kappa` and
/// composed with `omega`: the hypothesis dominant for the `f'/g'` implication,
/// the conclusion dominant elsewhere.
pub fn implication_trial_with(
    theorem: TheoremId,
    params: &TrialParams,
    omega: &SchwarzPoly,
    kappa: f64,
    seed: u64,
) -> Result<TrialReport> {
    let om = |z: C64| omega.eval(z * SHRINK);
    let zom = |z: C64| omega.z_derivative(z * SHRINK);
    let (hyp, con) = match (theorem, *params) {
        (TheoremId::T3_3, TrialParams::Ratio { alpha, m, beta }) => {
            // f' is built from the hypothesis dominant; p = f/z = int_0^1 f'(sz) ds
            let sp = thm1_params(alpha, m, beta, 0.0)?;
            let (lo, hi) = sp.hypothesis_sector();
            let target = sector_image(m, alpha)?;
            let e = cis(sp.mu * PI);
            let s = sp.delta * kappa;
            let fprime = |z: C64| ((ONE + e * om(z)) / (ONE - om(z))).powf(s);
            let quad = Integrator::with_tol(1e-13);
            let p = |z: C64| quad.integrate(|t| fprime(z * t), 0.0, 1.0).unwrap_or(c(f64::NAN, f64::NAN));
            let hyp = phase_outcome(fprime, 1.0, lo, hi, 0.0);
            let con = phase_outcome(p, 1.0, target.lo, target.hi, CONCLUSION_TOL);
            (hyp, con)
        }
        (
            TheoremId::T3_6,
            TrialParams::Power {
                alpha,
                beta,
                gamma,
                m,
                lambda0,
                epsilon,
            },
        ) => {
            let lambda = move |z: C64| lambda0 * (ONE + z * epsilon);
            let eta = eta_infimum(lambda, beta, 64)?.eta;
            let sp = thm2_params(alpha, beta, gamma, m, eta)?;
            let (lo, hi) = sp.hypothesis_sector();
            let target = sector_image(m, beta)?;
            let e = cis(m * PI);
            let s = beta * kappa;
            let p = |z: C64| ((ONE + e * om(z)) / (ONE - om(z))).powf(s);
            let zp_p = |z: C64| {
                let w = om(z);
                zom(z) * s * (e / (ONE + e * w) + ONE / (ONE - w))
            };
            let hyp = combined_phase_outcome(p, alpha, |z| ONE + lambda(z) * zp_p(z), gamma, lo, hi, 0.0);
            let con = phase_outcome(p, 1.0, target.lo, target.hi, CONCLUSION_TOL);
            (hyp, con)
        }
        (TheoremId::T5_4, TrialParams::Silverman { a, b, alpha, beta }) => {
            if !silverman_inclusion(a, b, alpha, beta)?.holds {
                return Err(JanowskiError::ConditionFailed {
                    excess: beta * (1.0 + b).powf(alpha - 1.0) * (1.0 + a.norm()).powf(alpha + 1.0)
                        - alpha * (a + b).norm(),
                });
            }
            let target = JanowskiParams::new(a, c(-b, 0.0))?.powered(alpha)?;
            target.require_argument_safe()?;
            let denom = |z: C64| ONE - omega.log_integral(z * SHRINK) * (beta * kappa);
            // |zp'/p^2| = beta kappa |omega|; the denominator must not vanish
            let max_w = unit_circle(TRIAL_SAMPLES).map(|z| om(z).norm()).fold(0.0, f64::max);
            let hyp = match phase_on_circle(denom, TRIAL_SAMPLES) {
                Some(t) if t.closed() => Outcome::from_margin(beta - beta * kappa * max_w, 0.0),
                _ => Outcome::failed(),
            };
            let samples: Vec<C64> = unit_circle(TRIAL_SAMPLES).map(|z| ONE / denom(z)).collect();
            (hyp, subordination_outcome(&samples, &target, CONCLUSION_TOL))
        }
        (TheoremId::T5_5, TrialParams::Reciprocal { alpha, beta }) => {
            let delta = reciprocal_order_sector(alpha, beta)?;
            let q = |z: C64| ONE - omega.log_integral(z * SHRINK) * (beta * kappa);
            let max_w = unit_circle(TRIAL_SAMPLES).map(|z| om(z).norm()).fold(0.0, f64::max);
            let hyp = Outcome::from_margin(beta - beta * kappa * max_w, 0.0);
            let half = delta * FRAC_PI_2;
            let con = phase_outcome(|z| (q(z) - alpha) / (1.0 - alpha), 1.0, -half, half, CONCLUSION_TOL);
            (hyp, con)
        }
        (TheoremId::T5_7, TrialParams::Dominant { spec }) => {
            spec.check_best_dominant()?;
            let target = JanowskiParams::new(spec.a, c(-spec.b, 0.0))?.powered(spec.gamma)?;
            target.require_argument_safe()?;
            let s = spec.gamma * kappa;
            let big_f = |z: C64| {
                let w = om(z);
                let p = spec.w_pow(w, s);
                let zp_p = log_derivative(spec.a, spec.b, w) * zom(z) * s;
                spec.w_pow(w, spec.alpha * s) * (spec.mu * spec.delta + spec.mu * spec.rho * p + spec.eta * zp_p)
            };
            let hyp = dominant_outcome(&spec, big_f);
            let samples: Vec<C64> = unit_circle(TRIAL_SAMPLES).map(|z| spec.w_pow(om(z), s)).collect();
            (hyp, subordination_outcome(&samples, &target, CONCLUSION_TOL))
        }
        (TheoremId::C5_12, TrialParams::Linear { lambda, m, b, gamma }) => {
            if !(lambda > 0.0 && lambda < 1.0) {
                return Err(JanowskiError::InvalidParameter(format!(
                    "lambda = {lambda} outside (0, 1)"
                )));
            }
            let spec = dominant_spec_linear(lambda, m, b, gamma);
            spec.validate()?;
            let tilt = tilt_angle(b, m)?;
            let s = gamma * kappa;
            let p = |z: C64| spec.w_pow(om(z), s);
            let big_f = |z: C64| {
                let w = om(z);
                let pv = spec.w_pow(w, s);
                pv * (1.0 - lambda) + pv * log_derivative(spec.a, b, w) * zom(z) * (s * lambda)
            };
            let hyp = dominant_outcome(&spec, big_f);
            let con = phase_outcome(
                p,
                1.0 / gamma,
                tilt - FRAC_PI_2,
                tilt + FRAC_PI_2,
                CONCLUSION_TOL,
            );
            (hyp, con)
        }
        (TheoremId::T5_10, TrialParams::BriotBouquet { a, b, alpha }) => {
            let w = JanowskiParams::new(a, c(-b, 0.0))?;
            let target = w.powered(alpha)?;
            target.require_argument_safe()?;
            if (ONE + a * b).re < (a + b).norm() {
                return Err(JanowskiError::ConditionFailed {
                    excess: (a + b).norm() - (ONE + a * b).re,
                });
            }
            let axis = target.axis();
            let big_p = |z: C64| {
                let v = (ONE + a * om(z)) / (ONE - om(z) * b);
                pow_about(v, alpha * kappa, axis)
            };
            let p_samples: Vec<C64> = unit_circle(TRIAL_SAMPLES).map(big_p).collect();
            let hyp = subordination_outcome(&p_samples, &target, 0.0);
            let q_fn = |z: C64| pow_about((ONE + a * z) / (ONE - z * b), alpha, axis);
            let con = match (starlike_boundary(big_p, TRIAL_SAMPLES), starlike_boundary(q_fn, TRIAL_SAMPLES)) {
                (Some(p), Some(q)) => {
                    let weak = subordination_outcome(&p, &target, CONCLUSION_TOL);
                    let coarse: Vec<C64> = p.iter().step_by(POLYGON_STRIDE).copied().collect();
                    let (_, poly) = inside_polygon(&q, &coarse, CONCLUSION_TOL);
                    let margin = weak.margin.map_or(poly, |m| m.min(poly));
                    Outcome::from_margin(margin, CONCLUSION_TOL)
                }
                _ => Outcome::failed(),
            };
            (hyp, con)
        }
        _ => return Err(mismatch(theorem, params)),
    };
    Ok(TrialReport {
        theorem,
        seed,
        degree: omega.degree(),
        kappa,
        params: *params,
        hypothesis_holds: hyp.holds,
        conclusion_holds: con.holds,
        hypothesis_margin: hyp.margin,
        conclusion_margin: con.margin,
        violation: hyp.holds && !con.holds,
    })
}

fn draw<R: Rng, T>(rng: &mut R, mut f: impl FnMut(&mut R) -> Option<T>) -> Result<T> {
    (0..MAX_DRAWS)
        .find_map(|_| f(rng))
        .ok_or_else(|| JanowskiError::NoRoot("no admissible parameters drawn".into()))
}

fn safe_target(a: C64, b: f64, alpha: f64) -> bool {
    JanowskiParams::new(a, c(-b, 0.0))
        .and_then(|p| p.powered(alpha))
        .map_or(false, |p| p.is_argument_safe())
}

/// Random admissible parameters for `theorem`, drawn from the seed's
/// parameter stream.
pub fn random_params<R: Rng>(theorem: TheoremId, rng: &mut R) -> Result<TrialParams> {
    Ok(match theorem {
        TheoremId::T3_3 => TrialParams::Ratio {
            alpha: rng.gen_range(0.2..=1.0),
            m: rng.gen_range(-0.9..0.9),
            beta: rng.gen_range(0.3..=0.99),
        },
        TheoremId::T3_6 => TrialParams::Power {
            alpha: rng.gen_range(0.3..=1.0),
            beta: rng.gen_range(0.3..=1.0),
            gamma: rng.gen_range(0.0..=1.0),
            m: rng.gen_range(-0.9..0.9),
            lambda0: C64::from_polar(rng.gen_range(0.3..1.5), rng.gen_range(-0.5..=0.5)),
            epsilon: rng.gen_range(0.0..=0.6),
        },
        TheoremId::T5_4 => draw(rng, |rng| {
            let a = random_disk(rng, 0.98);
            let b = rng.gen_range(0.0..=1.0);
            let alpha = rng.gen_range(0.2..=1.0);
            if (a + b).norm() < 0.05 || !safe_target(a, b, alpha) {
                return None;
            }
            let cap = alpha * (a + b).norm()
                / ((1.0 + b).powf(alpha - 1.0) * (1.0 + a.norm()).powf(alpha + 1.0));
            let beta = rng.gen_range(0.05..=1.0) * cap.min(1.0);
            Some(TrialParams::Silverman { a, b, alpha, beta })
        })?,
        TheoremId::T5_5 => {
            let alpha = rng.gen_range(0.0..0.8);
            let beta = rng.gen_range(0.05..=1.0) * (1.0 - alpha);
            TrialParams::Reciprocal { alpha, beta }
        }
        TheoremId::T5_7 => draw(rng, |rng| {
            let a = random_disk(rng, 0.95);
            let b = rng.gen_range(0.0..0.95);
            let gamma = rng.gen_range(0.2..=1.0);
            if (a + b).norm() < 0.05 || (ONE + a * b).re < (a + b).norm() || !safe_target(a, b, gamma) {
                return None;
            }
            Some(TrialParams::Dominant {
                spec: DominantSpec {
                    mu: c(rng.gen_range(0.2..1.5), 0.0),
                    delta: c(rng.gen_range(0.2..1.5), 0.0),
                    rho: c(rng.gen_range(0.0..1.0), 0.0),
                    eta: c(rng.gen_range(0.2..1.5), 0.0),
                    alpha: rng.gen_range(0.0..=1.0),
                    gamma,
                    a,
                    b,
                },
            })
        })?,
        TheoremId::C5_12 => TrialParams::Linear {
            lambda: rng.gen_range(0.05..0.95),
            m: rng.gen_range(-0.9..0.9),
            b: rng.gen_range(0.0..0.95),
            gamma: rng.gen_range(0.2..=1.0),
        },
        TheoremId::T5_10 => draw(rng, |rng| {
            let a = random_disk(rng, 0.95);
            let b = rng.gen_range(0.0..=0.9);
            let alpha = rng.gen_range(0.2..=1.0);
            if (a + b).norm() < 0.05 || (ONE + a * b).re < (a + b).norm() || !safe_target(a, b, alpha) {
                return None;
            }
            Some(TrialParams::BriotBouquet { a, b, alpha })
        })?,
    })
}

/// One seeded trial: degree in `1..=6` and `kappa` in `[0.6, 1.4]` come from
/// the parameter stream, the Schwarz coefficients from their own stream.
pub fn implication_trial(theorem: TheoremId, seed: u64) -> Result<TrialReport> {
    let mut rng = seeded_rng(seed, PARAMS_STREAM);
    let degree = rng.gen_range(1..=6);
    let kappa = rng.gen_range(0.6..=1.4);
    let params = random_params(theorem, &mut rng)?;
    let omega = random_schwarz(seed, degree)?;
    implication_trial_with(theorem, &params, &omega, kappa, seed)
}

/// All `(theorem, seed)` trials, in theorem then seed order.
pub fn run_trials(theorems: &[TheoremId], seeds: std::ops::Range<u64>) -> Result<Vec<TrialReport>> {
    let jobs: Vec<(TheoremId, u64)> = theorems
        .iter()
        .flat_map(|&t| seeds.clone().map(move |s| (t, s)))
        .collect();
    jobs.par_iter().map(|&(t, s)| implication_trial(t, s)).collect()
}
