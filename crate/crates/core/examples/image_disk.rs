//! Image of `|z| < r` under `(1 + Az)/(1 + Bz)`: centre, radius, origin position,
//! canonical form, and a containment check between two parameter sets.

use janowski::cmath::c;
use janowski::moebius::{canonicalize, contains, image_disk, origin_position, Region};
use janowski::JanowskiParams;

fn main() -> janowski::Result<()> {
    let p = JanowskiParams::new(c(0.6, 0.3), c(-0.2, 0.5))?;
    for r in [0.25, 0.5, 0.75, 1.0] {
        let g = image_disk(&p, r)?;
        match g.region {
            Region::Disk { center, radius } => println!(
                "r = {r:.2}: centre {:.6}{:+.6}i, radius {radius:.6}, tau {:.6}, zeta {:?}",
                center.re, center.im, g.tau, g.zeta
            ),
            Region::HalfPlane { point, normal } => {
                println!("r = {r:.2}: half-plane through {point} with normal {normal}")
            }
        }
    }
    println!("origin: {:?}", origin_position(&p));

    let canon = canonicalize(p.a(), p.b())?;
    println!("canonical: A' = {:.6}{:+.6}i, b = {:.6}", canon.a.re, canon.a.im, canon.b);

    // |B| = 1 gives a half-plane
    let edge = JanowskiParams::new(c(1.0, 0.0), c(0.0, -1.0))?;
    println!("{:?}", image_disk(&edge, 1.0)?.region);

    let outer = image_disk(&JanowskiParams::new(c(1.0, 0.0), c(0.0, 0.0))?, 1.0)?;
    let inner = image_disk(&p, 0.5)?;
    println!("image at r = 0.5 inside |w - 1| < 1: {}", contains(&outer, &inner));
    Ok(())
}
