//! Subordination radii, class inclusions, alpha* and the radius of starlikeness,
//! with the sampled containment check at and just beyond each radius. The
//! second problem has unequal powers, where the formula overshoots.

use janowski::cmath::{c, ZERO};
use janowski::oracle::radius_containment;
use janowski::radius::{
    alpha_star, class_inclusion, reciprocal_radius, starlike_radius, subordination_radius,
    uralegaddi_radius, RadiusProblem,
};

fn main() -> janowski::Result<()> {
    let problems = [
        RadiusProblem::new(c(1.0, 0.0), ZERO, 1.0, ZERO, c(1.0, 0.0), c(-1.0, 0.0), 1.0, ZERO)?,
        RadiusProblem::new(c(0.5, 0.5), c(-0.3, 0.0), 0.7, c(0.1, 0.0), c(1.0, 0.0), c(-0.5, 0.0), 0.9, ZERO)?,
    ];
    for p in &problems {
        let r = subordination_radius(p);
        let at = radius_containment(p, r.r, 4096)?;
        let past = radius_containment(p, (r.r * 1.01).min(1.0), 4096)?;
        println!(
            "R = {:.12}  sampled max|psi^-1| at R: {:.9} (inside: {}), at 1.01 R: {:.9}",
            r.r, at.max_modulus, at.holds, past.max_modulus
        );
    }

    for (alpha, beta) in [(1.0, 0.5), (0.5, 1.0)] {
        let inc = class_inclusion(c(1.0, 0.0), c(-1.0, 0.0), alpha, c(1.0, 0.0), c(-1.0, 0.0), beta)?;
        println!("S*(1,-1,{beta}) in S*(1,-1,{alpha}): {} ({} <= {})", inc.holds, inc.lhs, inc.rhs);
    }

    println!("Re zf'/f < 3/2 radius: {:.12}", uralegaddi_radius(c(1.0, 0.0), c(-1.0, 0.0), 0.5, 1.5)?);
    println!("reciprocal order 1/2 radius: {:.12}", reciprocal_radius(c(1.0, 0.0), c(-1.0, 0.0), 0.5, 0.5)?);

    let a = alpha_star();
    println!("alpha* = {a:.16} (residual {:.1e})", 2.0 * a + 2.0 / std::f64::consts::PI * a.atan() - 1.0);
    let s = starlike_radius(1.0, -1.0, 1.0)?;
    println!(
        "starlikeness radius A = 1, B = -1: {:.16} (bisection {:.16}, smallest {})",
        s.r0, s.r0_bisection, s.smallest
    );
    Ok(())
}
