//! 3F2, the K integral and its closed forms, MacGregor's gamma, the dominant h
//! and the best dominant q.

use janowski::cmath::{c, C64, ONE};
use janowski::special::{
    best_dominant_q, dominant_h, dominant_spec_linear, hyper_3f2, k_closed_form,
    k_function_quadrature, k_function_series, macgregor_gamma, silverman_inclusion,
};

fn main() -> janowski::Result<()> {
    let li2 = hyper_3f2([1.0, 1.0, 1.0], [2.0, 2.0], 0.5, 1e-15)?;
    println!("3F2(1,1,1;2,2;1/2) = {:.15} after {} terms", li2.value, li2.terms);

    for (a, b) in [(c(0.5, 0.2), 0.4), (c(0.0, 0.0), 0.6), (c(0.7, -0.1), 0.0)] {
        let z = c(0.3, 0.4);
        let q = k_function_quadrature(a, b, 1.0, z)?;
        let closed = k_closed_form(a, b, z)?;
        println!("K(A = {a}, b = {b}) at {z}: quadrature {q:.12}, closed {closed:.12}");
    }
    let frac = k_function_series(c(0.5, 0.0), 0.0, 0.6, c(0.4, 0.0))?;
    println!("K with b = 0, alpha = 0.6 by series: {frac:.12}");

    for beta in [0.0, 0.25, 0.5, 0.75] {
        println!("gamma({beta}) = {:.12}", macgregor_gamma(beta)?);
    }

    let spec = dominant_spec_linear(0.5, 0.0, 1.0, 1.0);
    println!("h(1/2) for lambda = 1/2, m = 0, b = 1: {}", dominant_h(&spec, c(0.5, 0.0))?);

    let one = |_: C64| ONE;
    let q = best_dominant_q(one, 1.0, ONE, c(0.0, 0.0), ONE, c(0.0, 0.0), c(0.5, 0.0))?;
    println!("q(1/2) with A = 1, B = 0: {:.12}", q.re);

    let s = silverman_inclusion(ONE, 1.0, 1.0, 0.5)?;
    println!("Silverman criterion A = b = alpha = 1, beta = 1/2: {} ({} <= {})", s.holds, s.lhs, s.rhs);
    Ok(())
}
