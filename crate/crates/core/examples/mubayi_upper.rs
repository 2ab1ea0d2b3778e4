//! One edge above the Mantel threshold with book number at most `b + 1`.
//!
//! Run with `cargo run --example mubayi_upper [b] [n]`.

use bookgraph::constructions::{mubayi_upper, ConstructionReport};
use bookgraph::{census, graph6};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let b = args.next().transpose()?.unwrap_or(3);
    let n = args.next().transpose()?.unwrap_or(15);

    let built = mubayi_upper(b, n)?;
    let g = &built.graph;
    println!("{}", graph6::encode(g));
    println!(
        "before deletion: {} edges, {} triangles",
        built.pre_deletion_edges, built.pre_deletion_triangles
    );
    println!(
        "after deleting {:?}: {} edges (threshold {}), {} triangles (expected {}), book {}",
        built.deleted_edges,
        g.edge_count(),
        n * n / 4 + 1,
        census::triangle_count(g),
        built.expected_triangles,
        census::book_number(g)
    );
    println!("{}", serde_json::to_string(&ConstructionReport::for_mubayi(b, n, &built))?);
    Ok(())
}
