//! Writes SVG and CSV pictures of a few powered domains into a directory
//! (default `target/plots`).

use janowski::cli::render_svg;
use janowski::cmath::{c, C64};
use janowski::envelope::envelope_curve;
use janowski::JanowskiParams;
use std::path::PathBuf;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/plots".into()));
    std::fs::create_dir_all(&dir)?;
    let cases = [
        ("disk", c(0.6, 0.3), c(-0.2, 0.5), 1.0, 0.9),
        ("half_power", c(1.0, 0.0), c(0.0, 0.0), 0.5, 1.0),
        ("oblique", c(0.0, 0.8), c(0.3, -0.4), 0.7, 0.95),
    ];
    for (name, a, b, alpha, r) in cases {
        let p = JanowskiParams::new(a, b)?.powered(alpha)?;
        let curve = envelope_curve(&p, r, 2048)?;
        let points: Vec<C64> = curve.samples.iter().map(|s| C64::from_polar(s.m, s.n)).collect();
        let svg = dir.join(format!("{name}.svg"));
        let csv = dir.join(format!("{name}.csv"));
        std::fs::write(&svg, render_svg(&points, name))?;
        std::fs::write(&csv, curve.to_csv())?;
        println!("{} {}", svg.display(), csv.display());
    }
    Ok(())
}
