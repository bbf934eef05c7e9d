//! Exact geometry of the first-order Janowski map `w(z) = (1 + Az)/(1 + Bz)`.
//!
//! For `|B| r < 1` the circle `|z| = r` is carried onto the circle with
//!
//! ```text
//! C(r) = (1 - A conj(B) r^2) / (1 - |B|^2 r^2),    R(r) = |A - B| r / (1 - |B|^2 r^2),
//! ```
//!
//! and for `|B| r = 1` onto the perpendicular bisector of `1` and `A/B`.

use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

use crate::cmath::{cis, C64, ONE};
use crate::error::{JanowskiError, Result};

/// Slack used for the `|B| <= 1`, `|A - B| <= |1 - A conj(B)|` and `|B| r = 1` tests.
pub const EQ_TOL: f64 = 1e-12;

/// Parameters of `psi(z) = (1 - gamma) ((1 + Az)/(1 + Bz))^alpha + gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JanowskiParams {
    a: C64,
    b: C64,
    alpha: f64,
    gamma: C64,
}

impl JanowskiParams {
    /// First-order map with `alpha = 1`, `gamma = 0`.
    pub fn new(a: C64, b: C64) -> Result<Self> {
        if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(JanowskiError::InvalidParameter(
                "A and B must be finite".into(),
            ));
        }
        if (a - b).norm() == 0.0 {
            return Err(JanowskiError::DegenerateMap("A = B".into()));
        }
        if b.norm() > 1.0 + EQ_TOL {
            return Err(JanowskiError::InvalidParameter(format!(
                "|B| = {} exceeds 1",
                b.norm()
            )));
        }
        Ok(JanowskiParams {
            a,
            b,
            alpha: 1.0,
            gamma: C64::new(0.0, 0.0),
        })
    }

    /// Raise the map to the power `alpha` in (0, 1]; requires the origin not to
    /// be an interior point of the first-order image.
    pub fn powered(mut self, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(JanowskiError::InvalidParameter(format!(
                "alpha = {alpha} outside (0, 1]"
            )));
        }
        self.require_argument_safe()?;
        self.alpha = alpha;
        Ok(self)
    }

    /// Affine shift `gamma`, any complex value except 1.
    pub fn shifted(mut self, gamma: C64) -> Result<Self> {
        if (gamma - ONE).norm() == 0.0 {
            return Err(JanowskiError::InvalidParameter("gamma = 1".into()));
        }
        self.gamma = gamma;
        Ok(self)
    }

    pub fn a(&self) -> C64 {
        self.a
    }

    pub fn b(&self) -> C64 {
        self.b
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn gamma(&self) -> C64 {
        self.gamma
    }

    /// `A conj(B)`.
    pub fn a_conj_b(&self) -> C64 {
        self.a * self.b.conj()
    }

    /// `|A - B| <= |1 - A conj(B)|`, plus `|A| <= 1` when `|B| = 1` (where the
    /// first inequality degenerates to an identity).
    pub fn is_argument_safe(&self) -> bool {
        let lhs = (self.a - self.b).norm();
        let rhs = (ONE - self.a_conj_b()).norm();
        let unit_b = (self.b.norm() - 1.0).abs() <= EQ_TOL;
        lhs <= rhs + EQ_TOL && (!unit_b || self.a.norm() <= 1.0 + EQ_TOL)
    }

    pub fn require_argument_safe(&self) -> Result<()> {
        if self.is_argument_safe() {
            Ok(())
        } else {
            Err(JanowskiError::BranchUndefined(format!(
                "origin is interior to the image of (1+Az)/(1+Bz) for A = {}, B = {}",
                self.a, self.b
            )))
        }
    }

    /// Direction of the image's axis of symmetry seen from the origin,
    /// `arg(1 - A conj(B))`; lies in [-pi/2, pi/2] for argument-safe maps.
    pub fn axis(&self) -> f64 {
        (ONE - self.a_conj_b()).arg()
    }

    /// Largest radius at which the image is still a bounded disk (or `1`).
    pub fn max_radius(&self) -> f64 {
        if self.b.norm() <= EQ_TOL {
            1.0
        } else {
            (1.0 / self.b.norm()).min(1.0)
        }
    }

    /// `(1 + Az)/(1 + Bz)`.
    pub fn eval(&self, z: C64) -> Result<C64> {
        let den = ONE + self.b * z;
        if den.norm() <= 1e-300 {
            return Err(JanowskiError::PoleOnBoundary { re: z.re, im: z.im });
        }
        Ok((ONE + self.a * z) / den)
    }

    /// `d/dz (1 + Az)/(1 + Bz) = (A - B)/(1 + Bz)^2`.
    pub fn eval_derivative(&self, z: C64) -> Result<C64> {
        let den = ONE + self.b * z;
        if den.norm() <= 1e-300 {
            return Err(JanowskiError::PoleOnBoundary { re: z.re, im: z.im });
        }
        Ok((self.a - self.b) / (den * den))
    }

    /// Inverse of the first-order map, `(w - 1)/(A - Bw)`.
    pub fn inverse(&self, w: C64) -> C64 {
        (w - ONE) / (self.a - self.b * w)
    }
}

/// `(1 + Az)/(1 + Bz)` for raw parameters.
pub fn eval_map(p: &JanowskiParams, z: C64) -> Result<C64> {
    p.eval(z)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Region {
    Disk {
        center: C64,
        radius: f64,
    },
    /// `{ w : Re((w - point) conj(normal)) > 0 }`, `normal` of unit length.
    HalfPlane {
        point: C64,
        normal: C64,
    },
}

impl Region {
    /// Signed distance from `w` to the boundary, positive inside.
    pub fn signed_distance(&self, w: C64) -> f64 {
        match *self {
            Region::Disk { center, radius } => radius - (w - center).norm(),
            Region::HalfPlane { point, normal } => ((w - point) * normal.conj()).re,
        }
    }
}

/// Image of `|z| < r` under the first-order map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskGeometry {
    pub r: f64,
    pub region: Region,
    /// Quadrant-correct direction of the centre (or inward normal) seen from the origin.
    pub tau: f64,
    /// Half-angle subtended at the origin; `None` when the origin is interior.
    pub zeta: Option<f64>,
}

impl DiskGeometry {
    pub fn is_disk(&self) -> bool {
        matches!(self.region, Region::Disk { .. })
    }

    pub fn center(&self) -> Option<C64> {
        match self.region {
            Region::Disk { center, .. } => Some(center),
            Region::HalfPlane { .. } => None,
        }
    }

    pub fn radius(&self) -> Option<f64> {
        match self.region {
            Region::Disk { radius, .. } => Some(radius),
            Region::HalfPlane { .. } => None,
        }
    }
}

pub fn image_disk(p: &JanowskiParams, r: f64) -> Result<DiskGeometry> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(JanowskiError::InvalidParameter(format!(
            "r = {r} outside (0, 1]"
        )));
    }
    let a = p.a();
    let b = p.b();
    let ab = p.a_conj_b();
    let r2 = r * r;
    let diff = (a - b).norm();
    let br = b.norm() * r;
    if (br - 1.0).abs() <= EQ_TOL {
        // |w - 1| < |w - A/B|
        let far = a / b;
        let direction = ONE - far;
        let normal = direction / direction.norm();
        let point = (ONE + far) * 0.5;
        let origin_inside = (-point * normal.conj()).re > EQ_TOL;
        return Ok(DiskGeometry {
            r,
            region: Region::HalfPlane { point, normal },
            tau: normal.arg(),
            zeta: if origin_inside { None } else { Some(FRAC_PI_2) },
        });
    }
    let scale = 1.0 - br * br;
    let num = ONE - ab * r2;
    let center = num / scale;
    let radius = diff * r / scale;
    let ratio = diff * r / num.norm();
    let zeta = if ratio <= 1.0 + EQ_TOL {
        Some(ratio.min(1.0).asin())
    } else {
        None
    };
    Ok(DiskGeometry {
        r,
        region: Region::Disk { center, radius },
        tau: num.arg(),
        zeta,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OriginPosition {
    Exterior,
    Boundary,
    Interior,
}

/// Position of `w = 0` relative to the image of the full unit disk.
pub fn origin_position(p: &JanowskiParams) -> OriginPosition {
    let a = p.a().norm();
    if (a - 1.0).abs() <= EQ_TOL {
        OriginPosition::Boundary
    } else if a < 1.0 {
        OriginPosition::Exterior
    } else {
        OriginPosition::Interior
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CanonicalParams {
    pub a: C64,
    pub b: f64,
}

impl CanonicalParams {
    /// The canonical map `(1 + A'z)/(1 - bz)`.
    pub fn to_params(&self) -> Result<JanowskiParams> {
        JanowskiParams::new(self.a, C64::new(-self.b, 0.0))
    }
}

/// Rotate `(A, B)` so that `B = -b` with `b = |B|`; `A conj(B)` is unchanged, so
/// the image circle is identical.
pub fn canonicalize(a: C64, b: C64) -> Result<CanonicalParams> {
    JanowskiParams::new(a, b)?;
    let mag = b.norm();
    if mag == 0.0 {
        return Ok(CanonicalParams { a, b: 0.0 });
    }
    let rotated = a * cis(-(b.arg() - std::f64::consts::PI));
    Ok(CanonicalParams { a: rotated, b: mag })
}

/// Region containment `inner ⊆ outer` (closed regions, slack `EQ_TOL`).
pub fn contains(outer: &DiskGeometry, inner: &DiskGeometry) -> bool {
    match (outer.region, inner.region) {
        (
            Region::Disk {
                center: c2,
                radius: r2,
            },
            Region::Disk {
                center: c1,
                radius: r1,
            },
        ) => (c1 - c2).norm() + r1 <= r2 + EQ_TOL,
        (Region::HalfPlane { point, normal }, Region::Disk { center, radius }) => {
            ((center - point) * normal.conj()).re >= radius - EQ_TOL
        }
        (
            Region::HalfPlane {
                point: p2,
                normal: n2,
            },
            Region::HalfPlane {
                point: p1,
                normal: n1,
            },
        ) => (n1 - n2).norm() <= 1e-9 && ((p1 - p2) * n2.conj()).re >= -EQ_TOL,
        (Region::Disk { .. }, Region::HalfPlane { .. }) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmath::c;
    use std::f64::consts::PI;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn eval_examples() {
        let p = JanowskiParams::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(eval_map(&p, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let p = JanowskiParams::new(c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert!(close(eval_map(&p, c(0.5, 0.0)).unwrap(), c(3.0, 0.0), 1e-15));
        let p = JanowskiParams::new(c(0.5, 0.0), c(-0.5, 0.0)).unwrap();
        assert!(close(
            eval_map(&p, c(0.0, 0.5)).unwrap(),
            c(15.0 / 17.0, 8.0 / 17.0),
            1e-15
        ));
    }

    #[test]
    fn pole_is_reported() {
        let p = JanowskiParams::new(c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert!(matches!(
            eval_map(&p, c(1.0, 0.0)),
            Err(JanowskiError::PoleOnBoundary { .. })
        ));
    }

    #[test]
    fn construction_rejects_bad_parameters() {
        assert!(matches!(
            JanowskiParams::new(c(0.3, 0.1), c(0.3, 0.1)),
            Err(JanowskiError::DegenerateMap(_))
        ));
        assert!(JanowskiParams::new(c(0.0, 0.0), c(1.2, 0.0)).is_err());
        let p = JanowskiParams::new(c(1.2, 0.0), c(0.0, 0.0)).unwrap();
        assert!(matches!(
            p.powered(0.5),
            Err(JanowskiError::BranchUndefined(_))
        ));
        assert!(JanowskiParams::new(c(2.0, 0.0), c(-1.0, 0.0))
            .unwrap()
            .powered(0.5)
            .is_err());
        assert!(p.shifted(c(1.0, 0.0)).is_err());
        assert!(JanowskiParams::new(c(0.5, 0.0), c(0.0, 0.0))
            .unwrap()
            .powered(1.5)
            .is_err());
    }

    #[test]
    fn image_disk_examples() {
        let p = JanowskiParams::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let g = image_disk(&p, 0.5).unwrap();
        assert!(close(g.center().unwrap(), c(1.0, 0.0), 1e-15));
        assert!((g.radius().unwrap() - 0.5).abs() < 1e-15);

        let p = JanowskiParams::new(c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        let g = image_disk(&p, 1.0).unwrap();
        match g.region {
            Region::HalfPlane { point, normal } => {
                assert!(close(point, c(0.0, 0.0), 1e-15));
                assert!(close(normal, c(1.0, 0.0), 1e-15));
            }
            _ => panic!("expected a half-plane"),
        }
        assert_eq!(g.zeta, Some(FRAC_PI_2));

        let p = JanowskiParams::new(c(0.5, 0.0), c(-0.5, 0.0)).unwrap();
        let g = image_disk(&p, 0.5).unwrap();
        assert!(close(g.center().unwrap(), c(17.0 / 15.0, 0.0), 1e-15));
        assert!((g.radius().unwrap() - 8.0 / 15.0).abs() < 1e-15);
        assert!((g.zeta.unwrap() - (8.0f64 / 17.0).asin()).abs() < 1e-15);
    }

    #[test]
    fn image_disk_rejects_bad_radius() {
        let p = JanowskiParams::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(image_disk(&p, 0.0).is_err());
        assert!(image_disk(&p, 1.5).is_err());
    }

    #[test]
    fn tau_agrees_with_single_argument_form_in_right_half_plane() {
        // arctan(Im(A conj B) r^2 / (Re(A conj B) r^2 - 1)) when 1 - Re(A conj B) r^2 > 0
        let p = JanowskiParams::new(c(0.4, 0.7), c(-0.3, 0.5)).unwrap();
        for &r in &[0.2, 0.6, 0.95] {
            let ab = p.a_conj_b();
            let printed = ((ab.im * r * r) / (ab.re * r * r - 1.0)).atan();
            let g = image_disk(&p, r).unwrap();
            assert!((g.tau - printed).abs() < 1e-14);
        }
    }

    #[test]
    fn origin_position_examples() {
        let at = |a: f64, b: f64| {
            origin_position(&JanowskiParams::new(c(a, 0.0), c(b, 0.0)).unwrap())
        };
        assert_eq!(at(0.5, 0.0), OriginPosition::Exterior);
        assert_eq!(at(1.0, -1.0), OriginPosition::Boundary);
        assert_eq!(at(1.2, 0.0), OriginPosition::Interior);
    }

    #[test]
    fn canonicalize_examples() {
        let k = canonicalize(c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert!(close(k.a, c(1.0, 0.0), 1e-15));
        assert_eq!(k.b, 1.0);

        let k = canonicalize(c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        assert!(close(k.a, c(0.0, 1.0), 1e-15));
        assert_eq!(k.b, 1.0);

        let k = canonicalize(c(0.0, 1.0), c(0.0, 0.0)).unwrap();
        assert_eq!(k.a, c(0.0, 1.0));
        assert_eq!(k.b, 0.0);
    }

    #[test]
    fn canonical_form_preserves_geometry() {
        let a = c(0.3, -0.6);
        let b = c(-0.2, 0.7);
        let orig = JanowskiParams::new(a, b).unwrap();
        let canon = canonicalize(a, b).unwrap().to_params().unwrap();
        for k in 1..=50 {
            let r = k as f64 / 50.0;
            let g1 = image_disk(&orig, r).unwrap();
            let g2 = image_disk(&canon, r).unwrap();
            assert!((g1.radius().unwrap() - g2.radius().unwrap()).abs() < 1e-12);
            assert!((g1.center().unwrap().norm() - g2.center().unwrap().norm()).abs() < 1e-12);
            assert!((g1.zeta.unwrap() - g2.zeta.unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn containment_examples() {
        let disk = |a: f64, b: f64| {
            image_disk(&JanowskiParams::new(c(a, 0.0), c(b, 0.0)).unwrap(), 1.0).unwrap()
        };
        let caratheodory = disk(1.0, -1.0);
        let unit_about_one = disk(1.0, 0.0);
        let half_about_one = disk(0.5, 0.0);
        assert!(contains(&caratheodory, &caratheodory));
        assert!(contains(&unit_about_one, &unit_about_one));
        assert!(contains(&caratheodory, &unit_about_one));
        assert!(!contains(&half_about_one, &unit_about_one));
        assert!(contains(&unit_about_one, &half_about_one));
        assert!(!contains(&unit_about_one, &caratheodory));
    }

    #[test]
    fn tilted_half_planes() {
        // (1 + e^{i m pi} z)/(1 - z) maps onto Re(e^{-i m pi / 2} w) > 0
        for &m in &[-0.7, -0.25, 0.0, 0.4, 0.9] {
            let p = JanowskiParams::new(cis(m * PI), c(-1.0, 0.0)).unwrap();
            let g = image_disk(&p, 1.0).unwrap();
            assert!((g.tau - m * PI / 2.0).abs() < 1e-14);
            assert!(g.region.signed_distance(c(0.0, 0.0)).abs() < 1e-14);
        }
    }
}
