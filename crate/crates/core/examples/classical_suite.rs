//! Rademacher and Edwards bounds on every graph just above the Mantel
//! threshold, by exhaustive enumeration.
//!
//! Run with `cargo run --release --example classical_suite [n_max]`.

use bookgraph::search::classical_suite;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(7);
    let suite = classical_suite(n_max, false)?;
    println!("{:>2} {:>5} {:>8} {:>6} {:>6}  bounds", "n", "m >=", "classes", "min t", "min b");
    for row in &suite.rows {
        let show = |v: Option<u64>| v.map_or("-".into(), |x| x.to_string());
        println!(
            "{:>2} {:>5} {:>8} {:>6} {:>6}  t >= {}: {}, 6b >= n: {}",
            row.n,
            row.min_edges,
            row.classes,
            show(row.min_triangles),
            show(row.min_book.map(|b| b as u64)),
            row.n / 2,
            row.rademacher,
            row.edwards
        );
    }
    println!("all passed: {}", suite.passed);
    Ok(())
}
