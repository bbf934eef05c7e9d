//! Sector parameters of the argument implications, the infimum `eta`, the
//! reciprocal-order sector and the double-subordination tilt.

use janowski::cmath::{C64, ONE};
use janowski::sector::{
    cor1_params, double_subordination_tilt, eta_infimum, reciprocal_order_sector, thm1_params,
    thm2_params,
};

fn main() -> janowski::Result<()> {
    println!("f'/g' => f/g");
    for m in [-0.5, 0.0, 0.5] {
        let sp = thm1_params(0.5, m, 0.8, 0.2)?;
        let (lo, hi) = sp.hypothesis_sector();
        println!(
            "  m = {m:+.1}: mu1 {:.6} mu2 {:.6} mu {:+.6} delta {:.6} sector ({lo:.4}, {hi:.4})",
            sp.mu1, sp.mu2, sp.mu, sp.delta
        );
    }
    let (_, bound) = cor1_params(0.5, 0.0)?;
    println!("  g = z, alpha = 1/2: |arg zf'/f| < {bound:.9}");

    let lambda = |z: C64| ONE + z * 0.5;
    let eta = eta_infimum(lambda, 1.0, 256)?;
    println!("eta for lambda = 1 + z/2: {:.10} at {:.5}", eta.eta, eta.at);
    let sp = thm2_params(1.0, 1.0, 1.0, 0.0, 1.0)?;
    println!("p^alpha (1 + lambda zp'/p)^gamma: mu1 = mu2 = {}, delta = {}", sp.mu1, sp.delta);
    let sp = thm2_params(0.8, 0.6, 0.5, 0.3, eta.eta)?;
    println!("  alpha 0.8, beta 0.6, gamma 0.5, m 0.3: {sp:?}");

    println!("reciprocal order delta(1/2, 1/4) = {:.12}", reciprocal_order_sector(0.5, 0.25)?);

    match double_subordination_tilt(0.2, 0.3, 0.2, 0.3, 0.0, 0.5, 1.0) {
        Ok(t) => println!("double tilt: mu {:.9}, gamma {:.9}", t.mu, t.gamma),
        Err(e) => println!("double tilt: {e}"),
    }
    if let Err(e) = double_subordination_tilt(1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0) {
        println!("a = b = c = d = 1: {e}");
    }
    Ok(())
}
