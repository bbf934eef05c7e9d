//! Sharp bounds for `((1 + Az)/(1 + Bz))^alpha` on `|z| = r`, checked against
//! dense sampling.

use janowski::cmath::c;
use janowski::envelope::{alpha_nesting, envelope_bounds, sector_image, tilt_angle};
use janowski::oracle::empirical_bounds;
use janowski::JanowskiParams;

fn show(name: &str, lo: f64, hi: f64) {
    println!("  {name:<4} [{lo:>12.9}, {hi:>12.9}]");
}

fn main() -> janowski::Result<()> {
    let cases = [
        (c(1.0, 0.0), c(0.0, 0.0), 0.5, 1.0),
        (c(0.5, -0.6), c(0.3, 0.4), 0.7, 0.7),
        (c(0.0, 0.5), c(0.0, 0.0), 0.5, 0.5),
    ];
    for (a, b, alpha, r) in cases {
        let p = JanowskiParams::new(a, b)?.powered(alpha)?;
        let rep = envelope_bounds(&p, r)?;
        println!("A = {a}, B = {b}, alpha = {alpha}, r = {r}");
        show("arg", rep.arg_interval.lo, rep.arg_interval.hi);
        show("mod", rep.mod_interval.lo, rep.mod_interval.hi);
        show("re", rep.re_interval.lo, rep.re_interval.hi);
        show("im", rep.im_interval.lo, rep.im_interval.hi);
        println!(
            "  critical t1 = {:.9}, t2 = {:.9}, tau = {:.9}",
            rep.critical.t1, rep.critical.t2, rep.critical.tau
        );
        let s = empirical_bounds(&p, r, 200_000)?;
        let dev = (s.re_interval.lo - rep.re_interval.lo)
            .abs()
            .max((s.re_interval.hi - rep.re_interval.hi).abs())
            .max((s.im_interval.lo - rep.im_interval.lo).abs())
            .max((s.im_interval.hi - rep.im_interval.hi).abs());
        println!("  sampled Re/Im deviation {dev:.2e}");
    }

    let s = sector_image(0.5, 0.5)?;
    println!("sector m = 0.5, alpha = 0.5: ({:.6}, {:.6})", s.lo, s.hi);
    println!("tilt b = 0.5, m = 0.5: {:.9}", tilt_angle(0.5, 0.5)?);
    let p = JanowskiParams::new(c(1.0, 0.0), c(-1.0, 0.0))?;
    println!("W^(1/4) < W^(1/2): {}", alpha_nesting(&p, 0.25, 0.5)?);
    println!("W^(1/2) < W^(1/4): {}", alpha_nesting(&p, 0.5, 0.25)?);
    Ok(())
}
