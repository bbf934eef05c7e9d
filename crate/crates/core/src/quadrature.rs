//! Globally adaptive Gauss-Kronrod (7/15) quadrature of complex-valued integrands over a real interval.

use crate::cmath::{C64, ZERO};
use crate::error::{JanowskiError, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd Kronrod nodes (indices 1, 3, 5, 7).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Adaptive integrator configuration.
#[derive(Debug, Clone, Copy)]
pub struct Integrator {
    pub abs_tol: f64,
    /// Subdivision budget: at most `2^min(max_depth, 12)` subintervals.
    pub max_depth: u32,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator {
            abs_tol: 1e-10,
            max_depth: 60,
        }
    }
}

fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let k = kronrod * half;
    let g = gauss * half;
    (k, (k - g).norm())
}

impl Integrator {
    pub fn with_tol(abs_tol: f64) -> Self {
        Integrator {
            abs_tol,
            ..Default::default()
        }
    }

    /// Integrate `f` over `[a, b]`, repeatedly bisecting the subinterval with the
    /// largest error estimate until the summed estimate is below `abs_tol`.
    pub fn integrate<F: Fn(f64) -> C64>(&self, f: F, a: f64, b: f64) -> Result<C64> {
        if a == b {
            return Ok(ZERO);
        }
        let max_pieces = 1usize << self.max_depth.min(12);
        let first = gk15(&f, a, b);
        let mut pieces = vec![(a, b, first.0, first.1)];
        loop {
            let (sum, err) = pieces
                .iter()
                .fold((ZERO, 0.0), |(s, e), p| (s + p.2, e + p.3));
            if !(sum.re.is_finite() && sum.im.is_finite() && err.is_finite()) {
                return Err(JanowskiError::QuadratureFailure(format!(
                    "non-finite integrand on [{a}, {b}]"
                )));
            }
            if err <= self.abs_tol.max(4.0 * f64::EPSILON * sum.norm()) {
                return Ok(sum);
            }
            if pieces.len() >= max_pieces {
                return Err(JanowskiError::QuadratureFailure(format!(
                    "{} subintervals on [{a}, {b}], error estimate {err:e}",
                    pieces.len()
                )));
            }
            let worst = pieces
                .iter()
                .enumerate()
                .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap_or(std::cmp::Ordering::Equal))
                .map(|(k, _)| k)
                .expect("non-empty");
            let (lo, hi, _, _) = pieces.swap_remove(worst);
            let mid = 0.5 * (lo + hi);
            if mid <= lo.min(hi) || mid >= lo.max(hi) {
                return Err(JanowskiError::QuadratureFailure(format!(
                    "subinterval [{lo}, {hi}] cannot be split further, error estimate {err:e}"
                )));
            }
            let left = gk15(&f, lo, mid);
            let right = gk15(&f, mid, hi);
            pieces.push((lo, mid, left.0, left.1));
            pieces.push((mid, hi, right.0, right.1));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmath::c;

    #[test]
    fn integrates_polynomial_exactly() {
        let q = Integrator::default()
            .integrate(|x| c(x * x * x, -x), 0.0, 2.0)
            .unwrap();
        assert!((q - c(4.0, -2.0)).norm() < 1e-13);
    }

    #[test]
    fn integrates_log_singularity() {
        // int_0^1 ln x dx = -1
        let q = Integrator::with_tol(1e-11)
            .integrate(|x| c(x.ln(), 0.0), 0.0, 1.0)
            .unwrap();
        assert!((q.re + 1.0).abs() < 1e-10);
    }

    #[test]
    fn reports_failure_on_nonintegrable() {
        let err = Integrator {
            abs_tol: 1e-12,
            max_depth: 8,
        }
        .integrate(|x| c(1.0 / x, 0.0), 0.0, 1.0)
        .unwrap_err();
        assert!(matches!(err, JanowskiError::QuadratureFailure(_)));
    }
}
