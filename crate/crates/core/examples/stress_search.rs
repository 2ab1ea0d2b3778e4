//! Seeded local search beyond exhaustive range: `n = 12`, book number at
//! most 2, where `S_{2,12}` has 16 triangles.
//!
//! Run with `cargo run --release --example stress_search [n] [b] [iterations] [seed]`.

use std::time::Instant;

use bookgraph::search::{stress_search, SearchParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: u64| -> Result<u64, std::num::ParseIntError> {
        args.get(i).map_or(Ok(default), |s| s.parse())
    };
    let (n, b) = (arg(0, 12)? as usize, arg(1, 2)? as usize);
    let params = SearchParams::stress(n, b, arg(2, 200_000)?, arg(3, 0)?);

    let started = Instant::now();
    let cert = stress_search(&params)?;
    println!(
        "{} proposals in {:.2?}: best {:?} triangles, bound {}",
        cert.graphs_examined,
        started.elapsed(),
        cert.min_triangles_found,
        cert.conjectured_bound
    );
    println!("best graphs found: {}", cert.extremal_witnesses.len());
    if let Some(w) = cert.extremal_witnesses.first() {
        println!("  first {w}");
    }
    println!("below the bound: {}", cert.violation);
    cert.recheck()?;
    Ok(())
}
