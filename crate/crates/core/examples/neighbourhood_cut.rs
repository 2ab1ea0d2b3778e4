//! Best neighbourhood cut on seeded random graphs, with the guaranteed
//! bound `m - 4m²/n² + 6t/n` in exact arithmetic.
//!
//! Run with `cargo run --example neighbourhood_cut [n] [p] [seed]`.

use bookgraph::bipartite::lemma1_cut;
use bookgraph::{census, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(30), |s| s.parse())?;
    let p: f64 = args.get(1).map_or(Ok(0.5), |s| s.parse())?;
    let seed: u64 = args.get(2).map_or(Ok(0), |s| s.parse())?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..5 {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let picked: Vec<_> = edges.filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, picked)?;
        let cut = lemma1_cut(&g)?;
        println!(
            "#{round}: m = {:>3}, t = {:>4}, pivot {:>2}, |N| = {:>2}, interior {:>3} <= {} ({:.2})",
            g.edge_count(),
            census::triangle_count(&g),
            cut.pivot,
            cut.side_n.len(),
            cut.deleted_edges,
            cut.bound,
            *cut.bound.numer() as f64 / *cut.bound.denom() as f64
        );
        assert!(cut.within_bound());
    }
    Ok(())
}
