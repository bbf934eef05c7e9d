use janowski::cmath::{cis, C64, ONE, ZERO};
use janowski::envelope::{envelope_bounds, envelope_curve, eval_powered, inverse_powered, pow_about};
use janowski::moebius::{canonicalize, contains, image_disk, origin_position, OriginPosition};
use janowski::oracle::{implication_trial, radius_containment, random_schwarz, TheoremId};
use janowski::radius::{class_inclusion, starlike_radius, subordination_radius, RadiusProblem};
use janowski::sector::{cor1_params, thm1_params};
use janowski::special::{
    best_dominant_q, dominant_h, dominant_spec_linear, hyper_3f2, macgregor_gamma,
};
use janowski::JanowskiParams;
use proptest::prelude::*;
use std::f64::consts::{LN_2, PI};

fn point(max: f64) -> impl Strategy<Value = C64> {
    (0.0..max, 0.0..2.0 * PI).prop_map(|(r, t)| cis(t) * r)
}

fn safe_params() -> impl Strategy<Value = (JanowskiParams, f64)> {
    (point(1.0), point(0.95), 0.1..=1.0f64, 0.1..=1.0f64)
        .prop_filter_map("argument-safe with |B| r < 0.95", |(a, b, alpha, r)| {
            let p = JanowskiParams::new(a, b).ok()?.powered(alpha).ok()?;
            (p.is_argument_safe() && b.norm() * r < 0.95).then_some((p, r))
        })
}

fn unit_circle(n: usize) -> impl Iterator<Item = C64> {
    (0..n).map(move |k| cis(2.0 * PI * k as f64 / n as f64))
}

/// Li2 by its own power series.
fn dilog(x: f64) -> f64 {
    (1..2000).map(|k| x.powi(k) / (k * k) as f64).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_lies_on_circle(a in point(1.0), b in point(0.9), r in 0.05..=1.0f64) {
        let p = JanowskiParams::new(a, b).unwrap();
        let g = image_disk(&p, r).unwrap();
        let (center, radius) = (g.center().unwrap(), g.radius().unwrap());
        for z in unit_circle(1000) {
            let w = p.eval(z * r).unwrap();
            prop_assert!(((w - center).norm() - radius).abs() < 1e-12);
        }
    }

    #[test]
    fn canonical_form_keeps_radius_and_centre_modulus(a in point(1.0), b in point(0.99)) {
        let p = JanowskiParams::new(a, b).unwrap();
        let q = canonicalize(a, b).unwrap().to_params().unwrap();
        for k in 1..=10 {
            let r = k as f64 / 10.0;
            let (g, h) = (image_disk(&p, r).unwrap(), image_disk(&q, r).unwrap());
            prop_assert!((g.radius().unwrap() - h.radius().unwrap()).abs() < 1e-12);
            prop_assert!((g.center().unwrap().norm() - h.center().unwrap().norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn containment_matches_sampling(
        a1 in point(1.0), b1 in point(0.9), r1 in 0.1..=1.0f64,
        a2 in point(1.0), b2 in point(0.9), r2 in 0.1..=1.0f64,
    ) {
        let p1 = JanowskiParams::new(a1, b1).unwrap();
        let p2 = JanowskiParams::new(a2, b2).unwrap();
        let outer = image_disk(&p1, r1).unwrap();
        let inner = image_disk(&p2, r2).unwrap();
        let (c1, rad1) = (outer.center().unwrap(), outer.radius().unwrap());
        let worst = unit_circle(10_000)
            .map(|z| (p2.eval(z * r2).unwrap() - c1).norm() - rad1)
            .fold(f64::NEG_INFINITY, f64::max);
        prop_assume!(worst.abs() > 1e-6);
        prop_assert_eq!(contains(&outer, &inner), worst < 0.0);
    }

    #[test]
    fn origin_position_matches_geometry(a in point(2.0), b in point(0.95)) {
        let p = JanowskiParams::new(a, b).unwrap();
        let g = image_disk(&p, 1.0).unwrap();
        let gap = g.center().unwrap().norm() - g.radius().unwrap();
        prop_assume!(gap.abs() > 1e-9);
        let expected = if gap > 0.0 { OriginPosition::Exterior } else { OriginPosition::Interior };
        prop_assert_eq!(origin_position(&p), expected);
    }

    #[test]
    fn branch_is_continuous((p, r) in safe_params()) {
        let curve = envelope_curve(&p, r, 4096).unwrap();
        let n = curve.samples.len();
        for k in 0..n {
            let jump = (curve.samples[(k + 1) % n].n - curve.samples[k].n).abs();
            prop_assert!(jump < PI / 2.0);
        }
    }

    #[test]
    fn bounds_grow_with_radius((p, r) in safe_params(), shrink in 0.1..0.99f64) {
        let small = envelope_bounds(&p, r * shrink).unwrap();
        let large = envelope_bounds(&p, r).unwrap();
        prop_assert!(large.arg_interval.contains(&small.arg_interval, 1e-9));
        prop_assert!(large.mod_interval.contains(&small.mod_interval, 1e-9));
        prop_assert!(large.re_interval.contains(&small.re_interval, 1e-9));
        prop_assert!(large.im_interval.contains(&small.im_interval, 1e-9));
    }

    #[test]
    fn critical_points_match_sampled_extremes((p, r) in safe_params()) {
        let rep = envelope_bounds(&p, r).unwrap();
        let g = image_disk(&p, r).unwrap();
        let (center, radius) = (g.center().unwrap(), g.radius().unwrap());
        let h = |t: f64| pow_about(center + cis(t) * radius, p.alpha(), p.axis());
        let curve = envelope_curve(&p, r, 4096).unwrap();
        let sampled = |part: fn(C64) -> f64| {
            curve.samples.iter().map(|s| part(C64::from_polar(s.m, s.n))).fold(f64::NEG_INFINITY, f64::max)
        };
        prop_assert!(h(rep.critical.t1).re >= sampled(|w| w.re) - 1e-12);
        prop_assert!(h(rep.critical.t2).im >= sampled(|w| w.im) - 1e-12);
        prop_assert!(h(rep.critical.t1_min).re <= -sampled(|w| -w.re) + 1e-12);
        prop_assert!(h(rep.critical.t2_min).im <= -sampled(|w| -w.im) + 1e-12);
    }

    #[test]
    fn powered_map_fixes_origin((p, _) in safe_params()) {
        prop_assert_eq!(eval_powered(&p, ZERO).unwrap(), ONE);
    }

    #[test]
    fn powered_inverse_round_trip((p, r) in safe_params(), t in 0.0..2.0 * PI) {
        let z = cis(t) * r;
        let back = inverse_powered(&p, eval_powered(&p, z).unwrap()).unwrap();
        prop_assert!((back - z).norm() < 1e-10);
    }

    #[test]
    fn mu_lies_between_minus_one_and_one(
        alpha in 0.05..=1.0f64, m in -0.9..0.9f64, beta in 0.05..=1.0f64, arg in -1.5..1.5f64,
    ) {
        let sp = thm1_params(alpha, m, beta, arg).unwrap();
        if sp.mu1 > 0.0 && sp.mu2 > 0.0 {
            prop_assert!(sp.mu > -1.0 && sp.mu < 1.0);
            prop_assert_eq!(sp.mu.signum(), (sp.mu2 - sp.mu1).signum());
        }
    }

    #[test]
    fn rotation_free_case_matches_identity_specialisation(alpha in 0.05..=1.0f64) {
        let (sp, _) = cor1_params(alpha, 0.0).unwrap();
        prop_assert_eq!(sp, thm1_params(alpha, 0.0, 1.0, 0.0).unwrap());
    }

    #[test]
    fn identical_source_and_target_give_unit_radius(a in point(1.0), b in point(1.0), alpha in 0.05..=1.0f64) {
        prop_assume!((a - b).norm() > 1e-3);
        let p = JanowskiParams::new(a, b).unwrap().powered(alpha).unwrap();
        prop_assert_eq!(subordination_radius(&RadiusProblem::identity(&p).unwrap()).r, 1.0);
    }

    #[test]
    fn inclusion_is_reflexive_and_antisymmetric(
        a in point(1.0), b in point(1.0), x in 0.05..=1.0f64, y in 0.05..=1.0f64,
    ) {
        prop_assume!((a - b).norm() > 1e-3 && (x - y).abs() > 1e-9);
        prop_assert!(class_inclusion(a, b, x, a, b, x).unwrap().holds);
        let forward = class_inclusion(a, b, x, a, b, y).unwrap().holds;
        let backward = class_inclusion(a, b, y, a, b, x).unwrap().holds;
        prop_assert!(forward != backward);
    }

    #[test]
    fn starlike_closed_form_solves_defining_equation(
        a in 0.6..=1.0f64, b in -1.0..=-0.6f64, beta in 1.0..3.0f64,
    ) {
        let s = starlike_radius(a, b, beta).unwrap();
        prop_assert!((s.r0 - s.r0_bisection).abs() < 1e-9);
        prop_assert!(s.residual < 1e-9);
        prop_assert!(s.smallest);
    }

    #[test]
    fn schwarz_polynomials_stay_in_the_disk(seed in any::<u64>(), degree in 1usize..=6) {
        let w = random_schwarz(seed, degree).unwrap();
        prop_assert_eq!(w.eval(ZERO), ZERO);
        for z in unit_circle(4096) {
            prop_assert!(w.eval(z).norm() <= 1.0 - 1e-6 + 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn trials_are_deterministic(seed in any::<u64>(), k in 0usize..7) {
        let theorem = TheoremId::ALL[k];
        prop_assert_eq!(implication_trial(theorem, seed).unwrap(), implication_trial(theorem, seed).unwrap());
    }
}

fn random_problem(k: u64, equal_powers: bool) -> Option<RadiusProblem> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(k);
    let mut pt = |max: f64| cis(rng.gen_range(0.0..2.0 * PI)) * (max * rng.gen::<f64>().sqrt());
    let (a, b, c0, d) = (pt(1.0), pt(0.9), pt(1.0), pt(0.9));
    let alpha = 0.3 + 0.7 * (k as f64 * 0.618).fract();
    let beta = if equal_powers { alpha } else { 0.3 + 0.7 * (k as f64 * 0.414).fract() };
    let p = RadiusProblem::new(a, b, alpha, ZERO, c0, d, beta, ZERO).ok()?;
    (p.target().ok()?.is_argument_safe() && p.source().ok()?.is_argument_safe()).then_some(p)
}

/// Problems whose image at `R - 1e-6` leaves the target, and how many problems
/// with `R < 1` have a sharpness witness at `R + 1e-3`.
fn radius_survey(equal_powers: bool) -> (Vec<(RadiusProblem, f64)>, usize, usize) {
    let problems: Vec<RadiusProblem> =
        (0..400).filter_map(|k| random_problem(k, equal_powers)).take(50).collect();
    assert_eq!(problems.len(), 50);
    let mut outside = Vec::new();
    let (mut below_one, mut witnesses) = (0, 0);
    for p in problems {
        let r = subordination_radius(&p).r;
        let inside = radius_containment(&p, (r - 1e-6).max(1e-6), 4096).unwrap();
        if !inside.holds {
            outside.push((p, inside.max_modulus));
        }
        if r < 1.0 {
            below_one += 1;
            if !radius_containment(&p, (r + 1e-3).min(1.0), 4096).unwrap().holds {
                witnesses += 1;
            }
        }
    }
    (outside, below_one, witnesses)
}

#[test]
fn radius_is_sharp_for_equal_powers() {
    let (outside, below_one, witnesses) = radius_survey(true);
    assert!(outside.is_empty(), "{outside:?}");
    assert!(below_one == 0 || witnesses > 0);
}

#[test]
fn radius_contains_for_unequal_powers() {
    let (outside, _, _) = radius_survey(false);
    assert!(
        outside.is_empty(),
        "{} of 50 problems leave the target at R - 1e-6, worst |psi^-1| = {:.4}",
        outside.len(),
        outside.iter().map(|o| o.1).fold(0.0, f64::max)
    );
}

#[test]
fn hypergeometric_matches_dilogarithm() {
    for k in 1..=9 {
        let x = k as f64 / 10.0;
        let v = hyper_3f2([1.0, 1.0, 1.0], [2.0, 2.0], x, 1e-15).unwrap().value;
        assert!((v * x - dilog(x)).abs() < 1e-12, "x = {x}");
    }
}

#[test]
fn best_dominant_matches_closed_form() {
    for z in unit_circle(16).flat_map(|u| [u * 0.2, u * 0.5, u * 0.8]) {
        let q = best_dominant_q(|_| ONE, 1.0, ONE, ZERO, ONE, ZERO, z).unwrap();
        let exact = z * z.exp() / (z.exp() - ONE);
        assert!((q - exact).norm() < 1e-8, "z = {z}");
    }
}

#[test]
fn dominant_at_origin() {
    let spec = dominant_spec_linear(0.5, 0.3, 0.7, 0.8);
    assert_eq!(dominant_h(&spec, ZERO).unwrap(), spec.mu * spec.delta + spec.mu * spec.rho);
}

#[test]
fn macgregor_is_continuous_at_half() {
    for beta in [0.5 - 1e-6, 0.5 + 1e-6] {
        assert!((macgregor_gamma(beta).unwrap() - 1.0 / (2.0 * LN_2)).abs() < 1e-5);
    }
}
