//! Edge, triangle and book counts of `S_{b,n}` against their closed forms.
//!
//! Run with `cargo run --example s_graph_census [n]`.

use bookgraph::census;
use bookgraph::constructions::{s_graph, s_graph_book_number, s_graph_triangles};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(24);

    println!("{:>3} {:>6} {:>9} {:>5}  parts", "b", "edges", "triangles", "book");
    for b in 0..=n / 4 {
        let g = s_graph(b, n)?;
        let profile = census::book_profile(&g);
        assert_eq!(g.edge_count(), n * n / 4);
        assert_eq!(profile.triangle_count, s_graph_triangles(b, n));
        assert_eq!(profile.book_number, s_graph_book_number(b, n));
        let r = n - 4 * b;
        println!(
            "{b:>3} {:>6} {:>9} {:>5}  ({b}, {b}, {}, {b}, {b}, {})",
            g.edge_count(),
            profile.triangle_count,
            profile.book_number,
            r / 2,
            r.div_ceil(2)
        );
    }
    Ok(())
}
