//! Command-line surface: argument types, report envelopes and plot output.
//!
//! Every command returns a [`ReportEnvelope`]; `--verify` appends an oracle
//! block computed by sampling, without touching the result block.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::cmath::{c, cis, parse_complex, parse_real, C64, ONE, ZERO};
use crate::envelope::{
    alpha_nesting, envelope_bounds, envelope_curve, eval_powered, sector_image,
    tilt_angle,
};
use crate::error::{JanowskiError, Result};
use crate::moebius::{canonicalize, contains, image_disk, origin_position, JanowskiParams};
use crate::oracle::sampling::{empirical_bounds, radius_containment, verify_subordination, BOUND_SAMPLES};
use crate::oracle::trials::{
    implication_trial_with, run_trials, starlike_ray, TheoremId, TrialParams,
};
use crate::oracle::SchwarzPoly;
use crate::radius::{
    alpha_star, class_inclusion, in_strongly_starlike, reciprocal_radius, starlike_radius,
    strongly_starlike_in, subordination_radius, uralegaddi_radius, RadiusProblem,
};
use crate::sector::{
    cor1_params, double_subordination_tilt, eta_infimum, reciprocal_order_sector, thm1_params,
    thm2_params,
};
use crate::special::{
    best_dominant_q, dominant_h, dominant_h_derivative, hyper_3f2_complex, k_closed_form,
    k_function, k_function_quadrature, k_function_series, macgregor_gamma, silverman_inclusion,
    DominantSpec,
};

/// Environment variable holding the default seed.
pub const SEED_ENV: &str = "JANOWSKI_SEED";
/// Points on plotted boundary curves.
pub const PLOT_POINTS: usize = 2048;
/// Sampling radius used by oracles when the closed form reaches the unit circle.
const ORACLE_RADIUS: f64 = 0.999;

fn complex(s: &str) -> std::result::Result<C64, String> {
    parse_complex(s).ok_or_else(|| format!("`{s}` is not a complex literal (try 1+2i, -0.5i, 0.25pi)"))
}

fn real(s: &str) -> std::result::Result<f64, String> {
    parse_real(s).ok_or_else(|| format!("`{s}` is not a real literal (try 0.5 or 0.25pi)"))
}

#[derive(Debug, Parser)]
#[command(name = "janowski", version, about = "Oblique Janowski domains ((1+Az)/(1+Bz))^alpha")]
pub struct Cli {
    /// Seed for every randomised step.
    #[arg(long, global = true, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Append a sampling-oracle block to the report.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Image disks, origin position, canonical form, containment.
    #[command(subcommand)]
    Geometry(GeometryCmd),
    /// Envelope bounds of the powered map; sector, tilt and sector-calculus subcommands.
    Bounds(BoundsCmd),
    /// Subordination and starlikeness radii, class inclusions, alpha*.
    #[command(subcommand)]
    Radius(RadiusCmd),
    /// 3F2, K, MacGregor gamma, dominants.
    #[command(subcommand)]
    Special(SpecialCmd),
    /// Seeded implication trials.
    Verify(VerifyArgs),
    /// SVG and CSV of the boundary curve.
    Plot(PlotArgs),
}

#[derive(Debug, Clone, Args)]
pub struct MapArgs {
    #[arg(long = "A", value_parser = complex, allow_hyphen_values = true)]
    pub a: C64,
    #[arg(long = "B", value_parser = complex, allow_hyphen_values = true)]
    pub b: C64,
}

#[derive(Debug, Clone, Args)]
pub struct PoweredArgs {
    #[command(flatten)]
    pub map: MapArgs,
    #[arg(long, value_parser = real, default_value = "1")]
    pub alpha: f64,
    #[arg(long, value_parser = complex, default_value = "0", allow_hyphen_values = true)]
    pub gamma: C64,
}

impl PoweredArgs {
    fn params(&self) -> Result<JanowskiParams> {
        JanowskiParams::new(self.map.a, self.map.b)?
            .powered(self.alpha)?
            .shifted(self.gamma)
    }
}

#[derive(Debug, Subcommand)]
pub enum GeometryCmd {
    ImageDisk {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_parser = real, default_value = "1")]
        r: f64,
    },
    Origin {
        #[command(flatten)]
        map: MapArgs,
    },
    Canonicalize {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Whether the image of `|z| < r2` under (A2, B2) lies in the image of `|z| < r` under (A, B).
    Contains {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_parser = real, default_value = "1")]
        r: f64,
        #[arg(long = "A2", value_parser = complex, allow_hyphen_values = true)]
        a2: C64,
        #[arg(long = "B2", value_parser = complex, allow_hyphen_values = true)]
        b2: C64,
        #[arg(long, value_parser = real, default_value = "1")]
        r2: f64,
    },
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
pub struct BoundsCmd {
    #[command(subcommand)]
    pub sub: Option<BoundsSub>,
    #[arg(long = "A", value_parser = complex, allow_hyphen_values = true)]
    pub a: Option<C64>,
    #[arg(long = "B", value_parser = complex, allow_hyphen_values = true)]
    pub b: Option<C64>,
    #[arg(long, value_parser = real, default_value = "1")]
    pub alpha: f64,
    #[arg(long, value_parser = complex, default_value = "0", allow_hyphen_values = true)]
    pub gamma: C64,
    #[arg(long, value_parser = real, default_value = "1")]
    pub r: f64,
}

#[derive(Debug, Subcommand)]
pub enum BoundsSub {
    /// Argument sector of `((1 + e^{im pi} z)/(1 - z))^alpha`.
    Sector {
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        m: f64,
        #[arg(long, value_parser = real)]
        alpha: f64,
    },
    /// Tilt of `(1 + e^{im pi} z)/(1 - bz)`.
    Tilt {
        #[arg(long, value_parser = real)]
        b: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        m: f64,
    },
    /// Whether `W^{a1}` is subordinate to `W^{a2}`.
    Nesting {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_parser = real)]
        a1: f64,
        #[arg(long, value_parser = real)]
        a2: f64,
    },
    /// Sector parameters of the `f'/g' => f/g` implication.
    Ratio {
        #[arg(long, value_parser = real)]
        alpha: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        m: f64,
        #[arg(long, value_parser = real, default_value = "1")]
        beta: f64,
        #[arg(long, value_parser = real, default_value = "0", allow_hyphen_values = true)]
        arg_ratio: f64,
    },
    /// Sector parameters of the `p^alpha (1 + lambda zp'/p)^gamma => p` implication;
    /// `eta` is given, or computed for `lambda(z) = lambda0 (1 + epsilon z)`.
    Power {
        #[arg(long, value_parser = real)]
        alpha: f64,
        #[arg(long, value_parser = real)]
        beta: f64,
        #[arg(long = "gamma", value_parser = real)]
        gamma: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        m: f64,
        #[arg(long, value_parser = real)]
        eta: Option<f64>,
        #[arg(long, value_parser = complex, default_value = "1", allow_hyphen_values = true)]
        lambda0: C64,
        #[arg(long, value_parser = real, default_value = "0", allow_hyphen_values = true)]
        epsilon: f64,
    },
    /// `delta = (2/pi) asin(beta/(1 - alpha))`.
    ReciprocalOrder {
        #[arg(long, value_parser = real)]
        alpha: f64,
        #[arg(long, value_parser = real)]
        beta: f64,
    },
    /// Double-subordination tilt.
    DoubleTilt {
        #[arg(long, value_parser = real)]
        a: f64,
        #[arg(long, value_parser = real)]
        b: f64,
        #[arg(long, value_parser = real)]
        c: f64,
        #[arg(long, value_parser = real)]
        d: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        l: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        m: f64,
        #[arg(long, value_parser = real)]
        alpha: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum RadiusCmd {
    /// Root of `2a + (2/pi) atan a = 1`.
    AlphaStar,
    /// Largest `r` with source(rz) subordinate to target.
    Subordination {
        #[command(flatten)]
        target: PoweredArgs,
        #[arg(long = "C", value_parser = complex, allow_hyphen_values = true)]
        c: C64,
        #[arg(long = "D", value_parser = complex, allow_hyphen_values = true)]
        d: C64,
        #[arg(long, value_parser = real, default_value = "1")]
        beta: f64,
        #[arg(long, value_parser = complex, default_value = "0", allow_hyphen_values = true)]
        delta: C64,
    },
    /// `S*(C, D, beta)` contained in `S*(A, B, alpha)`.
    Inclusion {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_parser = real)]
        alpha: f64,
        #[arg(long = "C", value_parser = complex, allow_hyphen_values = true)]
        c: C64,
        #[arg(long = "D", value_parser = complex, allow_hyphen_values = true)]
        d: C64,
        #[arg(long, value_parser = real)]
        beta: f64,
    },
    /// Strongly starlike of order beta contained in `S*(A, B, alpha)`.
    StronglyStarlikeIn {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_parser = real)]
        alpha: f64,
        #[arg(long, value_parser = real)]
        beta: f64,
    },
    /// `S*(C, D, beta)` contained in the strongly starlike functions of order alpha.
    InStronglyStarlike {
        #[arg(long = "C", value_parser = complex, allow_hyphen_values = true)]
        c: C64,
        #[arg(long = "D", value_parser = complex, allow_hyphen_values = true)]
        d: C64,
        #[arg(long, value_parser = real)]
        beta: f64,
        #[arg(long, value_parser = real)]
        alpha: f64,
    },
    /// Radius of `Re(zf'/f) < beta2`.
    Uralegaddi {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_parser = real)]
        alpha: f64,
        #[arg(long, value_parser = real)]
        beta2: f64,
    },
    /// Radius of starlikeness of reciprocal order beta2.
    Reciprocal {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_parser = real)]
        alpha: f64,
        #[arg(long, value_parser = real)]
        beta2: f64,
    },
    /// Radius of starlikeness for `f' < ((1 + Az)/(1 + Bz))^beta`, real A and B.
    Starlike {
        #[arg(long = "A", value_parser = real, allow_hyphen_values = true)]
        a: f64,
        #[arg(long = "B", value_parser = real, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, value_parser = real, default_value = "1")]
        beta: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KRoute {
    Auto,
    Quadrature,
    Series,
    Closed,
}

#[derive(Debug, Subcommand)]
pub enum SpecialCmd {
    /// `3F2(a1, a2, a3; b1, b2; x)`.
    Hyper3f2 {
        /// Three comma-separated upper parameters.
        #[arg(long, value_delimiter = ',', value_parser = real, allow_hyphen_values = true)]
        upper: Vec<f64>,
        /// Two comma-separated lower parameters.
        #[arg(long, value_delimiter = ',', value_parser = real, allow_hyphen_values = true)]
        lower: Vec<f64>,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        x: C64,
        #[arg(long, value_parser = real, default_value = "1e-15")]
        tol: f64,
    },
    /// `K(z)` by the chosen route.
    K {
        #[arg(long = "A", value_parser = complex, allow_hyphen_values = true)]
        a: C64,
        #[arg(long, value_parser = real)]
        b: f64,
        #[arg(long, value_parser = real, default_value = "1")]
        alpha: f64,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        z: C64,
        #[arg(long, value_enum, default_value = "auto")]
        route: KRoute,
    },
    /// MacGregor's `gamma(beta)`.
    Macgregor {
        #[arg(long, value_parser = real)]
        beta: f64,
    },
    /// Dominant `h(z)` and `h'(z)`.
    Dominant {
        #[arg(long, value_parser = complex, default_value = "1", allow_hyphen_values = true)]
        mu: C64,
        #[arg(long, value_parser = complex, default_value = "1", allow_hyphen_values = true)]
        delta: C64,
        #[arg(long, value_parser = complex, default_value = "0", allow_hyphen_values = true)]
        rho: C64,
        #[arg(long, value_parser = complex, default_value = "1", allow_hyphen_values = true)]
        eta: C64,
        #[arg(long, value_parser = real, default_value = "1")]
        alpha: f64,
        #[arg(long = "gamma", value_parser = real, default_value = "1")]
        gamma: f64,
        #[arg(long = "A", value_parser = complex, allow_hyphen_values = true)]
        a: C64,
        #[arg(long, value_parser = real)]
        b: f64,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        z: C64,
    },
    /// Best dominant `q(z)` for `lambda(z) = 1 + epsilon z`.
    Q {
        #[arg(long, value_parser = complex, default_value = "0", allow_hyphen_values = true)]
        epsilon: C64,
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_parser = real, default_value = "1")]
        alpha: f64,
        #[arg(long, value_parser = complex, default_value = "1", allow_hyphen_values = true)]
        beta: C64,
        #[arg(long = "gamma", value_parser = complex, default_value = "0", allow_hyphen_values = true)]
        gamma: C64,
        #[arg(long, value_parser = complex, allow_hyphen_values = true)]
        z: C64,
    },
    /// `beta (1 + b)^{alpha - 1} (1 + |A|)^{alpha + 1} <= alpha |A + b|`.
    Silverman {
        #[arg(long = "A", value_parser = complex, allow_hyphen_values = true)]
        a: C64,
        #[arg(long, value_parser = real)]
        b: f64,
        #[arg(long, value_parser = real)]
        alpha: f64,
        #[arg(long, value_parser = real)]
        beta: f64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Theorem ids (T3.3, T3.6, T5.4, T5.5, T5.7, C5.12, T5.10) or `all`.
    #[arg(long = "theorem", default_value = "all")]
    pub theorems: Vec<String>,
    /// Number of seeds, starting at `--seed`.
    #[arg(long, default_value_t = 50)]
    pub count: u64,
    /// Print one JSON line per trial instead of the envelope.
    #[arg(long)]
    pub jsonl: bool,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub powered: PoweredArgs,
    #[arg(long, value_parser = real, default_value = "1")]
    pub r: f64,
    #[arg(long, default_value = "janowski.svg")]
    pub svg: PathBuf,
    #[arg(long, default_value = "janowski.csv")]
    pub csv: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub command: Vec<String>,
    pub params: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Value>,
    pub version: &'static str,
    pub seed: u64,
}

impl ReportEnvelope {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialise")
}

fn circle(n: usize, r: f64) -> impl Iterator<Item = C64> {
    (0..n).map(move |k| cis(2.0 * PI * k as f64 / n as f64) * r)
}

/// Result and oracle blocks of one command.
type Blocks = (Value, Value, Option<Value>);

pub fn cmd_geometry(cmd: &GeometryCmd, verify: bool) -> Result<Blocks> {
    match cmd {
        GeometryCmd::ImageDisk { map, r } => {
            let p = JanowskiParams::new(map.a, map.b)?;
            let g = image_disk(&p, *r)?;
            let oracle = verify.then(|| {
                let deviation = circle(1000, *r)
                    .filter_map(|z| p.eval(z).ok())
                    .map(|w| g.region.signed_distance(w).abs())
                    .fold(0.0, f64::max);
                json!({ "samples": 1000, "max_boundary_deviation": deviation })
            });
            Ok((json!({ "A": map.a, "B": map.b, "r": r }), to_value(&g), oracle))
        }
        GeometryCmd::Origin { map } => {
            let p = JanowskiParams::new(map.a, map.b)?;
            let pos = origin_position(&p);
            let oracle = verify.then(|| {
                // w = 0 has the preimage -1/A
                let pre = if map.a == ZERO { f64::INFINITY } else { 1.0 / map.a.norm() };
                let min_modulus = circle(4096, 1.0)
                    .filter_map(|z| p.eval(z).ok())
                    .map(|w| w.norm())
                    .fold(f64::INFINITY, f64::min);
                json!({ "preimage_modulus": pre, "min_boundary_modulus": min_modulus })
            });
            Ok((json!({ "A": map.a, "B": map.b }), to_value(&pos), oracle))
        }
        GeometryCmd::Canonicalize { map } => {
            let canon = canonicalize(map.a, map.b)?;
            let oracle = if verify {
                let p = JanowskiParams::new(map.a, map.b)?;
                let q = canon.to_params()?;
                let samples: Vec<C64> = circle(4096, 0.9).map(|z| p.eval(z)).collect::<Result<_>>()?;
                let check = verify_subordination(&samples, &q, 1.0, 0.0)?;
                Some(json!({ "max_inverse_modulus_at_r_0_9": check.max_modulus }))
            } else {
                None
            };
            Ok((json!({ "A": map.a, "B": map.b }), to_value(&canon), oracle))
        }
        GeometryCmd::Contains { map, r, a2, b2, r2 } => {
            let outer_p = JanowskiParams::new(map.a, map.b)?;
            let inner_p = JanowskiParams::new(*a2, *b2)?;
            let outer = image_disk(&outer_p, *r)?;
            let inner = image_disk(&inner_p, *r2)?;
            let holds = contains(&outer, &inner);
            let oracle = if verify {
                let samples: Vec<C64> = circle(10_000, *r2)
                    .filter_map(|z| inner_p.eval(z).ok())
                    .collect();
                let check = verify_subordination(&samples, &outer_p, *r, 1e-9)?;
                Some(json!({ "samples": samples.len(), "sampled_holds": check.holds, "max_inverse_modulus": check.max_modulus }))
            } else {
                None
            };
            Ok((
                json!({ "A": map.a, "B": map.b, "r": r, "A2": a2, "B2": b2, "r2": r2 }),
                json!({ "contains": holds, "outer": outer, "inner": inner }),
                oracle,
            ))
        }
    }
}

pub fn cmd_bounds(cmd: &BoundsCmd, verify: bool) -> Result<Blocks> {
    let Some(sub) = &cmd.sub else {
        let (Some(a), Some(b)) = (cmd.a, cmd.b) else {
            return Err(JanowskiError::InvalidParameter(
                "bounds needs --A and --B, or a subcommand".into(),
            ));
        };
        let p = JanowskiParams::new(a, b)?.powered(cmd.alpha)?.shifted(cmd.gamma)?;
        let report = envelope_bounds(&p, cmd.r)?;
        let oracle = if verify {
            let s = empirical_bounds(&p, cmd.r, BOUND_SAMPLES)?;
            let dev = [
                (s.arg_interval, report.arg_interval),
                (s.mod_interval, report.mod_interval),
                (s.re_interval, report.re_interval),
                (s.im_interval, report.im_interval),
            ]
            .iter()
            .map(|(a, b)| (a.lo - b.lo).abs().max((a.hi - b.hi).abs()))
            .fold(0.0, f64::max);
            Some(json!({ "sampled": s, "max_endpoint_deviation": dev }))
        } else {
            None
        };
        let params = json!({ "A": a, "B": b, "alpha": cmd.alpha, "gamma": cmd.gamma, "r": cmd.r });
        return Ok((params, to_value(&report), oracle));
    };
    match sub {
        BoundsSub::Sector { m, alpha } => {
            let s = sector_image(*m, *alpha)?;
            let oracle = verify.then(|| {
                let e = cis(m * PI);
                let args: Vec<f64> = circle(4096, ORACLE_RADIUS)
                    .map(|z| (((ONE + e * z) / (ONE - z)).powf(*alpha)).arg())
                    .collect();
                let lo = args.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = args.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                json!({ "sampled_lo": lo, "sampled_hi": hi, "r": ORACLE_RADIUS })
            });
            Ok((json!({ "m": m, "alpha": alpha }), to_value(&s), oracle))
        }
        BoundsSub::Tilt { b, m } => {
            let t = tilt_angle(*b, *m)?;
            let oracle = verify.then(|| {
                let e = cis(m * PI);
                let rot = cis(-t);
                let min_re = circle(4096, ORACLE_RADIUS)
                    .map(|z| (rot * (ONE + e * z) / (ONE - z * *b)).re)
                    .fold(f64::INFINITY, f64::min);
                json!({ "min_rotated_real_part": min_re, "r": ORACLE_RADIUS })
            });
            Ok((json!({ "b": b, "m": m }), json!({ "tilt": t }), oracle))
        }
        BoundsSub::Nesting { map, a1, a2 } => {
            let p = JanowskiParams::new(map.a, map.b)?;
            let nested = alpha_nesting(&p, *a1, *a2)?;
            let oracle = if verify {
                let inner = p.powered(*a1)?;
                let outer = p.powered(*a2)?;
                let samples: Vec<C64> = circle(4096, ORACLE_RADIUS)
                    .map(|z| eval_powered(&inner, z))
                    .collect::<Result<_>>()?;
                let check = verify_subordination(&samples, &outer, 1.0, 0.0)?;
                Some(json!({ "r": ORACLE_RADIUS, "sampled_holds": check.holds, "max_inverse_modulus": check.max_modulus }))
            } else {
                None
            };
            Ok((json!({ "A": map.a, "B": map.b, "a1": a1, "a2": a2 }), json!({ "nested": nested }), oracle))
        }
        BoundsSub::Ratio { alpha, m, beta, arg_ratio } => {
            let sp = thm1_params(*alpha, *m, *beta, *arg_ratio)?;
            let cor = if *arg_ratio == 0.0 && *beta == 1.0 {
                Some(cor1_params(*alpha, *m)?.1)
            } else {
                None
            };
            let oracle = if verify {
                Some(trial_block(TheoremId::T3_3, TrialParams::Ratio { alpha: *alpha, m: *m, beta: *beta })?)
            } else {
                None
            };
            Ok((
                json!({ "alpha": alpha, "m": m, "beta": beta, "arg_ratio": arg_ratio }),
                json!({ "params": sp, "hypothesis_sector": sp.hypothesis_sector(), "arg_bound": cor }),
                oracle,
            ))
        }
        BoundsSub::Power { alpha, beta, gamma, m, eta, lambda0, epsilon } => {
            let (lambda0, epsilon) = (*lambda0, *epsilon);
            let eta = match eta {
                Some(e) => *e,
                None => eta_infimum(move |z| lambda0 * (ONE + z * epsilon), *beta, 256)?.eta,
            };
            let sp = thm2_params(*alpha, *beta, *gamma, *m, eta)?;
            let oracle = if verify {
                Some(trial_block(
                    TheoremId::T3_6,
                    TrialParams::Power { alpha: *alpha, beta: *beta, gamma: *gamma, m: *m, lambda0, epsilon },
                )?)
            } else {
                None
            };
            Ok((
                json!({ "alpha": alpha, "beta": beta, "gamma": gamma, "m": m, "lambda0": lambda0, "epsilon": epsilon }),
                json!({ "params": sp, "hypothesis_sector": sp.hypothesis_sector() }),
                oracle,
            ))
        }
        BoundsSub::ReciprocalOrder { alpha, beta } => {
            let delta = reciprocal_order_sector(*alpha, *beta)?;
            let oracle = if verify {
                Some(trial_block(TheoremId::T5_5, TrialParams::Reciprocal { alpha: *alpha, beta: *beta })?)
            } else {
                None
            };
            Ok((json!({ "alpha": alpha, "beta": beta }), json!({ "delta": delta }), oracle))
        }
        BoundsSub::DoubleTilt { a, b, c: cc, d, l, m, alpha } => {
            let t = double_subordination_tilt(*a, *b, *cc, *d, *l, *m, *alpha)?;
            let oracle = verify.then(|| {
                // mu is the sum of the two half-angles seen from the origin
                let half = |x: f64, y: f64, k: f64| {
                    let e = cis(k * PI) * x;
                    let args: Vec<f64> = circle(4096, ORACLE_RADIUS)
                        .map(|z| ((ONE + e * z) / (ONE - z * y)).arg())
                        .collect();
                    let lo = args.iter().copied().fold(f64::INFINITY, f64::min);
                    let hi = args.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                    (hi - lo) / 2.0
                };
                json!({ "sampled_outer_half_angle": half(*cc, *d, *m), "sampled_inner_half_angle": half(*a, *b, *l) })
            });
            Ok((
                json!({ "a": a, "b": b, "c": cc, "d": d, "l": l, "m": m, "alpha": alpha }),
                to_value(&t),
                oracle,
            ))
        }
    }
}

fn trial_block(theorem: TheoremId, params: TrialParams) -> Result<Value> {
    let omegas = [
        SchwarzPoly::from_coefficients(vec![ONE])?,
        crate::oracle::random_schwarz(1, 3)?,
        crate::oracle::random_schwarz(2, 5)?,
    ];
    let reports = omegas
        .iter()
        .enumerate()
        .map(|(i, w)| implication_trial_with(theorem, &params, w, 1.0, i as u64))
        .collect::<Result<Vec<_>>>()?;
    let violations = reports.iter().filter(|r| r.violation).count();
    Ok(json!({ "trials": reports, "violations": violations }))
}

pub fn cmd_radius(cmd: &RadiusCmd, verify: bool) -> Result<Blocks> {
    match cmd {
        RadiusCmd::AlphaStar => {
            let a = alpha_star();
            let residual = 2.0 * a + 2.0 / PI * a.atan() - 1.0;
            let oracle = verify.then(|| json!({ "residual": residual }));
            Ok((json!({}), json!({ "alpha_star": a, "printed": format!("{a:.8}") }), oracle))
        }
        RadiusCmd::Subordination { target, c: cc, d, beta, delta } => {
            let p = RadiusProblem::new(
                target.map.a, target.map.b, target.alpha, target.gamma, *cc, *d, *beta, *delta,
            )?;
            let report = subordination_radius(&p);
            let oracle = if verify {
                let at = radius_containment(&p, report.r, 4096)?;
                let beyond = if report.r < 1.0 {
                    Some(radius_containment(&p, (report.r * 1.01).min(1.0), 4096)?)
                } else {
                    None
                };
                Some(json!({ "at_radius": at, "one_percent_beyond": beyond }))
            } else {
                None
            };
            Ok((to_value(&p), to_value(&report), oracle))
        }
        RadiusCmd::Inclusion { map, alpha, c: cc, d, beta } => {
            let rep = class_inclusion(map.a, map.b, *alpha, *cc, *d, *beta)?;
            let oracle = if verify {
                let p = RadiusProblem::new(map.a, map.b, *alpha, ZERO, *cc, *d, *beta, ZERO)?;
                Some(to_value(&radius_containment(&p, ORACLE_RADIUS, 4096)?))
            } else {
                None
            };
            Ok((
                json!({ "A": map.a, "B": map.b, "alpha": alpha, "C": cc, "D": d, "beta": beta }),
                to_value(&rep),
                oracle,
            ))
        }
        RadiusCmd::StronglyStarlikeIn { map, alpha, beta } => {
            let rep = strongly_starlike_in(map.a, map.b, *alpha, *beta)?;
            let oracle = if verify {
                let target = JanowskiParams::new(map.a, map.b)?.powered(*alpha)?;
                let samples: Vec<C64> = circle(4096, ORACLE_RADIUS)
                    .map(|z| eval_powered(&JanowskiParams::new(ONE, c(-1.0, 0.0))?.powered(*beta)?, z))
                    .collect::<Result<_>>()?;
                Some(to_value(&verify_subordination(&samples, &target, 1.0, 0.0)?))
            } else {
                None
            };
            Ok((json!({ "A": map.a, "B": map.b, "alpha": alpha, "beta": beta }), to_value(&rep), oracle))
        }
        RadiusCmd::InStronglyStarlike { c: cc, d, beta, alpha } => {
            let rep = in_strongly_starlike(*cc, *d, *beta, *alpha)?;
            let oracle = if verify {
                let source = JanowskiParams::new(*cc, *d)?.powered(*beta)?;
                let max_arg = circle(4096, ORACLE_RADIUS)
                    .map(|z| eval_powered(&source, z).map(|w| w.arg().abs()))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .fold(0.0, f64::max);
                Some(json!({ "max_abs_arg": max_arg, "sector_half_angle": alpha * PI / 2.0 }))
            } else {
                None
            };
            Ok((json!({ "C": cc, "D": d, "beta": beta, "alpha": alpha }), to_value(&rep), oracle))
        }
        RadiusCmd::Uralegaddi { map, alpha, beta2 } => {
            let r = uralegaddi_radius(map.a, map.b, *alpha, *beta2)?;
            let oracle = if verify {
                let p = JanowskiParams::new(map.a, map.b)?.powered(*alpha)?;
                let max_re = circle(4096, r.min(ORACLE_RADIUS))
                    .map(|z| eval_powered(&p, z).map(|w| w.re))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .fold(f64::NEG_INFINITY, f64::max);
                Some(json!({ "max_real_part_at_radius": max_re }))
            } else {
                None
            };
            Ok((json!({ "A": map.a, "B": map.b, "alpha": alpha, "beta2": beta2 }), json!({ "r": r }), oracle))
        }
        RadiusCmd::Reciprocal { map, alpha, beta2 } => {
            let r = reciprocal_radius(map.a, map.b, *alpha, *beta2)?;
            let oracle = if verify {
                let p = JanowskiParams::new(map.a, map.b)?.powered(*alpha)?;
                let min_re = circle(4096, r.min(ORACLE_RADIUS))
                    .map(|z| eval_powered(&p, z).map(|w| (ONE / w).re))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .fold(f64::INFINITY, f64::min);
                Some(json!({ "min_reciprocal_real_part_at_radius": min_re }))
            } else {
                None
            };
            Ok((json!({ "A": map.a, "B": map.b, "alpha": alpha, "beta2": beta2 }), json!({ "r": r }), oracle))
        }
        RadiusCmd::Starlike { a, b, beta } => {
            let s = starlike_radius(*a, *b, *beta)?;
            let oracle = verify.then(|| {
                json!({ "closed_minus_bisection": s.r0 - s.r0_bisection, "residual": s.residual })
            });
            Ok((json!({ "A": a, "B": b, "beta": beta }), to_value(&s), oracle))
        }
    }
}

pub fn cmd_special(cmd: &SpecialCmd, verify: bool) -> Result<Blocks> {
    match cmd {
        SpecialCmd::Hyper3f2 { upper, lower, x, tol } => {
            let (Ok(up), Ok(lo)) = (<[f64; 3]>::try_from(upper.as_slice()), <[f64; 2]>::try_from(lower.as_slice()))
            else {
                return Err(JanowskiError::InvalidParameter(
                    "--upper takes three values and --lower two".into(),
                ));
            };
            let v = hyper_3f2_complex(up, lo, *x, *tol)?;
            let oracle = if verify {
                // partial sums at a tighter tolerance
                let tight = hyper_3f2_complex(up, lo, *x, tol * 1e-3)?;
                Some(json!({ "tighter": tight.value, "difference": (tight.value - v.value).norm() }))
            } else {
                None
            };
            Ok((json!({ "upper": upper, "lower": lower, "x": x }), to_value(&v), oracle))
        }
        SpecialCmd::K { a, b, alpha, z, route } => {
            let value = match route {
                KRoute::Auto => k_function(*a, *b, *alpha, *z)?,
                KRoute::Quadrature => k_function_quadrature(*a, *b, *alpha, *z)?,
                KRoute::Series => k_function_series(*a, *b, *alpha, *z)?,
                KRoute::Closed => {
                    if *alpha != 1.0 {
                        return Err(JanowskiError::InvalidParameter(
                            "the closed form needs alpha = 1".into(),
                        ));
                    }
                    k_closed_form(*a, *b, *z)?
                }
            };
            let oracle = if verify {
                let q = k_function_quadrature(*a, *b, *alpha, *z)?;
                let closed = if *alpha == 1.0 { k_closed_form(*a, *b, *z).ok() } else { None };
                Some(json!({ "quadrature": q, "closed_form": closed, "difference": (q - value).norm() }))
            } else {
                None
            };
            Ok((
                json!({ "A": a, "b": b, "alpha": alpha, "z": z, "route": route }),
                json!({ "value": value }),
                oracle,
            ))
        }
        SpecialCmd::Macgregor { beta } => {
            let g = macgregor_gamma(*beta)?;
            let oracle = if verify {
                // zf'/f at z = -r for the extremal convex function of order beta
                let r = 1.0 - 1e-9;
                let big_p = |z: C64| (ONE - z * r * (1.0 - 2.0 * beta)) / (ONE + z * r);
                let min_re = starlike_ray(big_p).re;
                Some(json!({ "r": r, "re_zf_over_f_at_minus_r": min_re }))
            } else {
                None
            };
            Ok((json!({ "beta": beta }), json!({ "gamma": g }), oracle))
        }
        SpecialCmd::Dominant { mu, delta, rho, eta, alpha, gamma, a, b, z } => {
            let spec = DominantSpec {
                mu: *mu,
                delta: *delta,
                rho: *rho,
                eta: *eta,
                alpha: *alpha,
                gamma: *gamma,
                a: *a,
                b: *b,
            };
            let h = dominant_h(&spec, *z)?;
            let dh = dominant_h_derivative(&spec, *z)?;
            let oracle = if verify {
                // apply the operator to p = W^gamma by central differences
                let e = 1e-6;
                let p = |t: C64| spec.w_pow(t, *gamma);
                let dp = (p(*z + e) - p(*z - e)) / (2.0 * e);
                let pz = p(*z);
                let op = spec.w_pow(*z, alpha * gamma) * (spec.mu * spec.delta + spec.mu * spec.rho * pz)
                    + spec.eta * *z * dp * spec.w_pow(*z, (alpha - 1.0) * gamma);
                Some(json!({ "operator_on_w_gamma": op, "difference": (op - h).norm() }))
            } else {
                None
            };
            Ok((to_value(&spec), json!({ "h": h, "h_prime": dh, "z": z }), oracle))
        }
        SpecialCmd::Q { epsilon, map, alpha, beta, gamma, z } => {
            let eps = *epsilon;
            let lambda = move |t: C64| ONE + eps * t;
            let qf = |t: C64| best_dominant_q(lambda, *alpha, map.a, map.b, *beta, *gamma, t);
            let q = qf(*z)?;
            let oracle = if verify {
                // residual of q + lambda zq'/q = W^alpha
                let e = 1e-5;
                let dq = (qf(*z + e)? - qf(*z - e)?) / (2.0 * e);
                let w = JanowskiParams::new(map.a, map.b)?.powered(*alpha)?;
                let rhs = eval_powered(&w, *z)?;
                let lhs = q + lambda(*z) * *z * dq / q;
                Some(json!({ "equation_residual": (lhs - rhs).norm() }))
            } else {
                None
            };
            Ok((
                json!({ "epsilon": epsilon, "A": map.a, "B": map.b, "alpha": alpha, "beta": beta, "gamma": gamma, "z": z }),
                json!({ "q": q }),
                oracle,
            ))
        }
        SpecialCmd::Silverman { a, b, alpha, beta } => {
            let rep = silverman_inclusion(*a, *b, *alpha, *beta)?;
            let oracle = if verify && rep.holds {
                Some(trial_block(
                    TheoremId::T5_4,
                    TrialParams::Silverman { a: *a, b: *b, alpha: *alpha, beta: *beta },
                )?)
            } else if verify {
                Some(json!({ "skipped": "criterion fails; no trial to run" }))
            } else {
                None
            };
            Ok((json!({ "A": a, "b": b, "alpha": alpha, "beta": beta }), to_value(&rep), oracle))
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, seed: u64) -> Result<(Value, Value, Vec<String>)> {
    let mut theorems = Vec::new();
    for t in &args.theorems {
        if t.eq_ignore_ascii_case("all") {
            theorems.extend(TheoremId::ALL);
        } else {
            theorems.push(t.parse::<TheoremId>()?);
        }
    }
    theorems.sort();
    theorems.dedup();
    let reports = run_trials(&theorems, seed..seed + args.count)?;
    let lines = reports.iter().map(|r| r.to_json_line()).collect();
    let summary: Vec<Value> = theorems
        .iter()
        .map(|&t| {
            let rs: Vec<_> = reports.iter().filter(|r| r.theorem == t).collect();
            json!({
                "theorem": t,
                "trials": rs.len(),
                "hypothesis_holds": rs.iter().filter(|r| r.hypothesis_holds).count(),
                "conclusion_holds": rs.iter().filter(|r| r.conclusion_holds).count(),
                "violations": rs.iter().filter(|r| r.violation).count(),
            })
        })
        .collect();
    let total = reports.iter().filter(|r| r.violation).count();
    Ok((
        json!({ "theorems": theorems, "first_seed": seed, "count": args.count }),
        json!({ "summary": summary, "violations": total, "reports": reports }),
        lines,
    ))
}

/// SVG of the boundary curve, autoscaled to its bounding box plus 10%, with
/// axes and the points `w = 0`, `w = 1` marked.
pub fn render_svg(points: &[C64], title: &str) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for w in points {
        x0 = x0.min(w.re);
        x1 = x1.max(w.re);
        y0 = y0.min(w.im);
        y1 = y1.max(w.im);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let pad = 0.1 * span;
    let (x0, x1, y0, y1) = (x0 - pad, x1 + pad, y0 - pad, y1 + pad);
    let size = 800.0;
    let scale = size / (x1 - x0).max(y1 - y0);
    let width = (x1 - x0) * scale;
    let height = (y1 - y0) * scale;
    let sx = |x: f64| (x - x0) * scale;
    let sy = |y: f64| (y1 - y) * scale;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(svg, "<title>{title}</title>");
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if (x0..=x1).contains(&0.0) {
        let _ = writeln!(svg, r##"<line x1="{0:.3}" y1="0" x2="{0:.3}" y2="{height:.3}" stroke="#999" stroke-width="1"/>"##, sx(0.0));
    }
    if (y0..=y1).contains(&0.0) {
        let _ = writeln!(svg, r##"<line x1="0" y1="{0:.3}" x2="{width:.3}" y2="{0:.3}" stroke="#999" stroke-width="1"/>"##, sy(0.0));
    }
    let mut path = String::new();
    for (k, w) in points.iter().enumerate() {
        let _ = write!(path, "{}{:.3},{:.3} ", if k == 0 { "M" } else { "L" }, sx(w.re), sy(w.im));
    }
    path.push('Z');
    let _ = writeln!(svg, r##"<path d="{path}" fill="#cfe0f5" fill-opacity="0.5" stroke="#1f4e8c" stroke-width="1.5"/>"##);
    for (label, w) in [("0", ZERO), ("1", ONE)] {
        let _ = writeln!(
            svg,
            r##"<circle cx="{:.3}" cy="{:.3}" r="3" fill="#c0392b"/><text x="{:.3}" y="{:.3}" font-size="12" font-family="sans-serif">{label}</text>"##,
            sx(w.re),
            sy(w.im),
            sx(w.re) + 5.0,
            sy(w.im) - 5.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn cmd_plot(args: &PlotArgs, verify: bool) -> Result<Blocks> {
    let p = args.powered.params()?;
    let curve = envelope_curve(&p, args.r, PLOT_POINTS)?;
    // u, v are on the first-order circle; the powered boundary is M e^{iN}
    let g = args.powered.gamma;
    let points: Vec<C64> = curve
        .samples
        .iter()
        .map(|s| g + (ONE - g) * C64::from_polar(s.m, s.n))
        .collect();
    let title = format!(
        "((1+({})z)/(1+({})z))^{} at r = {}",
        args.powered.map.a, args.powered.map.b, args.powered.alpha, args.r
    );
    write_file(&args.svg, &render_svg(&points, &title))?;
    write_file(&args.csv, &curve.to_csv())?;
    let oracle = if verify {
        // every plotted point maps back to |z| = r
        let dev = points
            .iter()
            .map(|&w| crate::envelope::inverse_powered(&p, w).map(|z| (z.norm() - args.r).abs()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        Some(json!({ "max_inverse_radius_deviation": dev }))
    } else {
        None
    };
    let params = json!({
        "A": args.powered.map.a, "B": args.powered.map.b,
        "alpha": args.powered.alpha, "gamma": args.powered.gamma, "r": args.r
    });
    Ok((params, json!({ "svg": args.svg, "csv": args.csv, "points": points.len() }), oracle))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| JanowskiError::InvalidParameter(format!("cannot write {}: {e}", path.display())))
}

/// What `run` produced: a report, or raw JSON lines.
pub enum Output {
    Report(ReportEnvelope),
    Lines(Vec<String>),
}

/// Dispatches a parsed command line.  `argv` is echoed in the report.
pub fn run(cli: &Cli, argv: Vec<String>) -> Result<Output> {
    let (params, result, oracle) = match &cli.command {
        Command::Geometry(cmd) => cmd_geometry(cmd, cli.verify)?,
        Command::Bounds(cmd) => cmd_bounds(cmd, cli.verify)?,
        Command::Radius(cmd) => cmd_radius(cmd, cli.verify)?,
        Command::Special(cmd) => cmd_special(cmd, cli.verify)?,
        Command::Plot(args) => cmd_plot(args, cli.verify)?,
        Command::Verify(args) => {
            let (params, result, lines) = cmd_verify(args, cli.seed)?;
            if args.jsonl {
                return Ok(Output::Lines(lines));
            }
            let oracle = cli.verify.then(|| json!({ "trials": result["reports"].as_array().map_or(0, |a| a.len()) }));
            (params, result, oracle)
        }
    };
    Ok(Output::Report(ReportEnvelope {
        command: argv,
        params,
        result,
        oracle,
        version: env!("CARGO_PKG_VERSION"),
        seed: cli.seed,
    }))
}

/// Parses `argv`, runs, prints; returns the process exit code.
pub fn main_with_args(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli, argv) {
        Ok(Output::Lines(lines)) => {
            let text = lines.join("\n") + "\n";
            emit(&cli.out, &text)
        }
        Ok(Output::Report(report)) => emit(&cli.out, &(report.to_json() + "\n")),
        Err(e) => {
            let body = json!({ "error": e.to_string(), "exit_code": e.exit_code() });
            eprintln!("{}", serde_json::to_string_pretty(&body).expect("error serialises"));
            e.exit_code()
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> i32 {
    match out {
        Some(path) => match write_file(path, text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        },
        None => {
            print!("{text}");
            0
        }
    }
}
