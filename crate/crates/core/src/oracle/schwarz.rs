//! Random polynomial Schwarz functions `omega(z) = s z P(z)`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

use crate::cmath::{c, cis, C64, ZERO};
use crate::error::{JanowskiError, Result};

/// Boundary samples used to normalise `omega`.
pub const NORMALIZE_SAMPLES: usize = 4096;
/// Sup-norm target after normalisation.
pub const SUP_BOUND: f64 = 1.0 - 1e-6;

/// Stream of the seeded generator reserved for Schwarz coefficients.
pub const SCHWARZ_STREAM: u64 = 0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchwarzPoly {
    /// Coefficients of `P`, constant term first.
    pub coefficients: Vec<C64>,
    pub scale: f64,
}

impl SchwarzPoly {
    /// `omega = 0`.
    pub fn zero() -> Self {
        SchwarzPoly {
            coefficients: vec![ZERO],
            scale: 0.0,
        }
    }

    /// Normalises `z P(z)` so that its sampled boundary maximum is `1 - 1e-6`.
    ///
    /// For degree `d >= 2` the scale also absorbs the Bernstein factor
    /// `1 - d pi/N`, which bounds the true maximum between samples.
    pub fn from_coefficients(coefficients: Vec<C64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(JanowskiError::InvalidParameter("no coefficients".into()));
        }
        let unit = SchwarzPoly {
            coefficients,
            scale: 1.0,
        };
        let max = (0..NORMALIZE_SAMPLES)
            .map(|k| unit.eval(cis(2.0 * PI * k as f64 / NORMALIZE_SAMPLES as f64)).norm())
            .fold(0.0, f64::max);
        if max == 0.0 {
            return Ok(SchwarzPoly::zero());
        }
        let degree = unit.degree();
        let guard = if degree >= 2 {
            1.0 - degree as f64 * PI / NORMALIZE_SAMPLES as f64
        } else {
            1.0
        };
        Ok(SchwarzPoly {
            scale: SUP_BOUND * guard / max,
            ..unit
        })
    }

    /// Degree of `z P(z)`.
    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    pub fn eval(&self, z: C64) -> C64 {
        let p = self
            .coefficients
            .iter()
            .rev()
            .fold(ZERO, |acc, &a| acc * z + a);
        z * p * self.scale
    }

    /// `z omega'(z)`.
    pub fn z_derivative(&self, z: C64) -> C64 {
        // omega = s sum a_k z^{k+1}  =>  z omega' = s sum (k + 1) a_k z^{k+1}
        let p = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .fold(ZERO, |acc, (k, &a)| acc * z + a * (k + 1) as f64);
        z * p * self.scale
    }

    /// `int_0^z omega(t)/t dt`.
    pub fn log_integral(&self, z: C64) -> C64 {
        let p = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .fold(ZERO, |acc, (k, &a)| acc * z + a / (k + 1) as f64);
        z * p * self.scale
    }
}

/// Seeded generator for a given purpose; streams keep purposes independent.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random Schwarz polynomial of the given degree (`1..=16`), coefficients of
/// `P` uniform in the unit square.  Deterministic per seed.
pub fn random_schwarz(seed: u64, degree: usize) -> Result<SchwarzPoly> {
    if !(1..=16).contains(&degree) {
        return Err(JanowskiError::InvalidParameter(format!(
            "degree {degree} outside 1..=16"
        )));
    }
    let mut rng = seeded_rng(seed, SCHWARZ_STREAM);
    let coefficients = (0..degree)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    SchwarzPoly::from_coefficients(coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmath::ONE;

    #[test]
    fn identity_like() {
        let w = SchwarzPoly::from_coefficients(vec![ONE]).unwrap();
        assert_eq!(w.scale, SUP_BOUND);
        assert!((w.eval(c(0.3, 0.4)) - c(0.3, 0.4) * SUP_BOUND).norm() < 1e-16);
    }

    #[test]
    fn normalised_on_fine_grid() {
        for seed in 0..20 {
            let w = random_schwarz(seed, 1 + (seed as usize % 16)).unwrap();
            assert_eq!(w.eval(ZERO), ZERO);
            let sup = (0..16384)
                .map(|k| w.eval(cis(2.0 * PI * k as f64 / 16384.0)).norm())
                .fold(0.0, f64::max);
            assert!(sup <= SUP_BOUND, "seed {seed}: {sup}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_schwarz(7, 5).unwrap(), random_schwarz(7, 5).unwrap());
        assert_ne!(random_schwarz(7, 5).unwrap(), random_schwarz(8, 5).unwrap());
    }

    #[test]
    fn derivative_and_integral() {
        let w = random_schwarz(3, 6).unwrap();
        let z = c(0.3, -0.5);
        let e = 1e-6;
        let fd = (w.eval(z + e) - w.eval(z - e)) / (2.0 * e);
        assert!((w.z_derivative(z) - z * fd).norm() < 1e-9);
        // d/dz log_integral = omega/z
        let fd = (w.log_integral(z + e) - w.log_integral(z - e)) / (2.0 * e);
        assert!((fd - w.eval(z) / z).norm() < 1e-9);
    }

    #[test]
    fn rejects_bad_degree() {
        assert!(random_schwarz(0, 0).is_err());
        assert!(random_schwarz(0, 17).is_err());
    }
}
