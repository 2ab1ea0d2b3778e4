//! Large induced bipartite subgraph of `S_{b,n}` near `b = n/4`, where the
//! extraction guarantee's hypotheses hold, and of a random graph, where they do not.
//!
//! Run with `cargo run --release --example bipartite_extraction [b] [n] [seed]`.

use bookgraph::bipartite::lemma2_extract;
use bookgraph::constructions::s_graph;
use bookgraph::rational::Rational;
use bookgraph::{census, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(label: &str, g: &Graph, b_cap: usize) -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{label}: n = {}, m = {}, t = {}, book number {}, b_cap {b_cap}",
        g.n(),
        g.edge_count(),
        census::triangle_count(g),
        census::book_number(g)
    );
    for c in [Rational::new(1, 5), Rational::new(1, 4)] {
        let r = lemma2_extract(g, c, b_cap)?;
        println!(
            "  c = {c}: |A| = {}, |B| = {}, removed {} <= {} ({}), repairs {}",
            r.a.len(),
            r.b.len(),
            r.removed.len(),
            r.removal_bound,
            if r.guarantee_applies { "guaranteed" } else { "hypotheses fail" },
            r.independence_repairs.len()
        );
        if r.guarantee_applies {
            assert!(r.removal_within_bound());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let b: usize = args.first().map_or(Ok(23), |s| s.parse())?;
    let n: usize = args.get(1).map_or(Ok(96), |s| s.parse())?;
    let seed: u64 = args.get(2).map_or(Ok(0), |s| s.parse())?;

    let g = s_graph(b, n)?;
    report("S_{b,n}", &g, b)?;

    // Random graph of the same density: too many triangles for the guarantee.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let random = Graph::from_edges(n, pairs.filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())?;
    report("G(n, 1/2)", &random, census::book_number(&random))?;
    Ok(())
}
