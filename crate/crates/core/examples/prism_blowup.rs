//! Blow-up of the triangular prism with arbitrary part sizes.
//!
//! Run with `cargo run --example prism_blowup [u1 u2 u3 v1 v2 v3]`.

use bookgraph::census;
use bookgraph::constructions::{prism_blowup, ConstructionReport, PrismSpec};
use bookgraph::graph6;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let sizes: [usize; 6] = match args.len() {
        0 => [3, 2, 1, 2, 3, 2],
        6 => args.try_into().expect("six sizes"),
        k => return Err(format!("expected six part sizes, got {k}").into()),
    };

    let spec = PrismSpec::new(sizes);
    let g = prism_blowup(&spec);
    let report = ConstructionReport::for_prism(&spec, &g);
    println!("{}", graph6::encode(&g));
    println!("{}", serde_json::to_string_pretty(&report)?);

    // Every edge of the blow-up lies in a fixed number of triangles given
    // by the part of the third vertex.
    let profile = census::book_profile(&g);
    let mut books: Vec<usize> = profile.per_edge.values().copied().collect();
    books.sort_unstable();
    books.dedup();
    println!("distinct edge codegrees: {books:?}");
    Ok(())
}
