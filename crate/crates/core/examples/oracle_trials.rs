//! Seeded implication trials for every theorem id, summarised per theorem.
//!
//! `cargo run --release --example oracle_trials -- [seeds] [--jsonl]`

use janowski::oracle::{run_trials, TheoremId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let seeds: u64 = args.iter().find_map(|a| a.parse().ok()).unwrap_or(50);
    let jsonl = args.iter().any(|a| a == "--jsonl");

    let reports = run_trials(&TheoremId::ALL, 0..seeds)?;
    if jsonl {
        for r in &reports {
            println!("{}", r.to_json_line());
        }
        return Ok(());
    }
    println!("{:<6} {:>6} {:>10} {:>10} {:>10}", "id", "trials", "hyp", "concl", "violations");
    for t in TheoremId::ALL {
        let rs: Vec<_> = reports.iter().filter(|r| r.theorem == t).collect();
        let hyp = rs.iter().filter(|r| r.hypothesis_holds).count();
        let con = rs.iter().filter(|r| r.conclusion_holds).count();
        let bad = rs.iter().filter(|r| r.violation).count();
        println!("{:<6} {:>6} {:>10} {:>10} {:>10}", t, rs.len(), hyp, con, bad);
    }
    for r in reports.iter().filter(|r| r.violation) {
        println!("violation: {}", r.to_json_line());
    }
    Ok(())
}
