//! Small complex helpers shared by the map evaluators and the quadrature code.

use num_complex::Complex64;
use std::f64::consts::PI;

pub type C64 = Complex64;

pub const I: C64 = C64 { re: 0.0, im: 1.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };
pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `e^{i theta}`.
#[inline]
pub fn cis(theta: f64) -> C64 {
    C64::from_polar(1.0, theta)
}

/// Wrap an angle into (-pi, pi].
pub fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t <= -PI {
        t += 2.0 * PI;
    } else if t > PI {
        t -= 2.0 * PI;
    }
    t
}

/// Argument of `w` on the branch centred at `axis`: `axis + Arg(w e^{-i axis})`.
///
/// Continuous on every region that avoids the ray `arg = axis + pi`.
#[inline]
pub fn arg_about(w: C64, axis: f64) -> f64 {
    axis + (w * cis(-axis)).arg()
}

/// `log(1 + u)` accurate for small `|u|`.
pub fn ln_1p(u: C64) -> C64 {
    if u.norm() < 1e-2 {
        // alternating series, 9 terms are plenty for |u| < 1e-2
        let mut term = u;
        let mut sum = ZERO;
        for k in 1..=10 {
            sum += term / k as f64;
            term *= -u;
        }
        sum
    } else {
        (ONE + u).ln()
    }
}

/// `exp(u) - 1` accurate for small `|u|`.
pub fn exp_m1(u: C64) -> C64 {
    if u.norm() < 1e-2 {
        let mut term = u;
        let mut sum = ZERO;
        for k in 2..=11 {
            sum += term;
            term *= u / k as f64;
        }
        sum
    } else {
        u.exp() - ONE
    }
}

pub fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Parse a complex literal: `2`, `-0.5`, `1+2i`, `0.5-0.25i`, `i`, `-i`, `3i`,
/// optionally with a trailing `pi` on a real literal (`0.5pi`).
pub fn parse_complex(text: &str) -> Option<C64> {
    let s: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    if let Some(stripped) = s.strip_suffix('i') {
        // find the split between real and imaginary parts: last +/- not following an exponent marker
        let bytes = stripped.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let ch = bytes[idx];
            if (ch == b'+' || ch == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(idx) => (&stripped[..idx], &stripped[idx..]),
            None => ("", stripped),
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            parse_real(re_part)?
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => parse_real(other)?,
        };
        Some(c(re, im))
    } else {
        parse_real(&s).map(|re| c(re, 0.0))
    }
}

/// Parse a real literal, accepting a trailing `pi` multiplier (`0.5pi`, `-pi`, `pi`).
pub fn parse_real(text: &str) -> Option<f64> {
    let s = text.trim();
    if let Some(coef) = s.strip_suffix("pi") {
        let k = match coef {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.trim_end_matches('*').parse::<f64>().ok()?,
        };
        return Some(k * PI);
    }
    s.parse::<f64>().ok()
}
