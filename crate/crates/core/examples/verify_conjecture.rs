//! Exhaustive minimum triangle count for `n = 9`, book number at most 2.
//!
//! Run with `cargo run --release --example verify_conjecture [n] [b]`.

use std::time::Instant;

use bookgraph::search::{verify_conjecture, SearchParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n = args.next().map(|s| s.parse()).transpose()?.unwrap_or(9);
    let b = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);

    let started = Instant::now();
    let cert = verify_conjecture(&SearchParams::exhaustive(n, b))?;
    let elapsed = started.elapsed();

    println!("n = {n}, b = {b}: {} classes examined in {elapsed:.2?}", cert.graphs_examined);
    println!(
        "minimum triangles {:?}, conjectured {} (in range: {})",
        cert.min_triangles_found, cert.conjectured_bound, cert.in_conjecture_range
    );
    for w in &cert.extremal_witnesses {
        println!("  witness {w}");
    }
    println!("unique minimizer is S_{{b,n}}: {}", cert.unique_extremal_is_s_graph);
    for (name, outcome) in &cert.suite_results {
        println!("  {name}: {:?} over {} graphs", outcome.status, outcome.checked);
    }
    cert.recheck()?;
    println!("certificate re-check: ok");
    Ok(())
}
