//! Isomorph-free enumeration: class counts, pruning statistics and the
//! canonical representatives of a small filtered family.
//!
//! Run with `cargo run --release --example enumerate_classes [n_max]`.

use bookgraph::graph6;
use bookgraph::search::{enumerate_classes, estimated_classes, fold_classes, EnumerationFilter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(8);

    println!("{:>2} {:>8} {:>8} {:>10}", "n", "classes", "known", "nodes");
    for n in 1..=n_max {
        let (count, stats) = fold_classes(&EnumerationFilter::all(n), false, || 0u64, |c, _| *c += 1, |a, b| a + b)?;
        println!("{n:>2} {count:>8} {:>8} {:>10}", estimated_classes(n).unwrap_or(0), stats.nodes);
    }

    // Triangle-free graphs on 7 vertices with at least 10 edges.
    let filter = EnumerationFilter { n: 7, min_edges: 10, max_book: Some(0) };
    for g in enumerate_classes(&filter, false)? {
        println!("{} ({} edges)", graph6::encode(&g.to_graph()), g.edge_count());
    }
    Ok(())
}
