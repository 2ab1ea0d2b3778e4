//! Tripartition statistics and both surgeries on a perturbed `S_{b,n}`.
//!
//! Run with `cargo run --example surgery_pipeline [b] [n]`.

use bookgraph::constructions::{s_graph, s_graph_spec};
use bookgraph::surgery::{self, TriPartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let b = args.next().transpose()?.unwrap_or(2);
    let n = args.next().transpose()?.unwrap_or(14);

    // A = U1 ∪ V2, B = U2 ∪ V1, C = U3 ∪ V3.
    let [u1, u2, u3, v1, v2, v3] = s_graph_spec(b, n)?.parts().map(|r| r.collect::<Vec<_>>());
    let a = [u1.as_slice(), &v2].concat();
    let bb = [u2.as_slice(), &v1].concat();
    let c = [u3.as_slice(), &v3].concat();
    let p = TriPartition::new(n, a.clone(), bb.clone(), c.clone())?;

    // Perturb: drop one A×B edge and one C-to-A edge, add two edges inside C.
    let mut work = s_graph(b, n)?.to_builder();
    work.remove_edge(a[0], bb[0])?;
    let v = c[c.len() - 1];
    let nbr = a.iter().copied().find(|&u| work.has_edge(u, v)).expect("C vertex sees A");
    work.remove_edge(nbr, v)?;
    let mut added = 0;
    for (i, &x) in c.iter().enumerate() {
        for &y in &c[i + 1..] {
            if added < 3 && work.add_edge(x, y)? {
                added += 1;
            }
        }
    }
    let g = work.build();

    let t = surgery::classify_triangles(&g, &p)?;
    println!("proper: {}, triangle types {t:?}", p.is_proper(&g)?);
    println!("b̄ = {}, t̃ = {}", surgery::bar_b(&g, &p)?, surgery::tilde_t(&g, &p)?);

    let (g1, r1) = surgery::to_g1(&g, &p, b)?;
    println!("G1: s = {}, added {:?}, deleted {:?}, D = {}", r1.s, r1.added, r1.deleted, r1.after.d_max);
    let (g2, r2) = surgery::to_g2(&g1, &p, b)?;
    for m in &r2.moves {
        println!(
            "  {:?} {:?}: 2t̃ {} -> {} (predicted {:+}, {})",
            m.kind,
            m.edge,
            m.tilde_t_doubled_before,
            m.tilde_t_doubled_after,
            m.predicted_delta,
            if m.delta_matches() { "ok" } else { "MISMATCH" }
        );
    }
    println!(
        "G2: {} edges (was {}), targets met: {}, t̃ = {}/2, bound b²(n-4b) = {}",
        g2.edge_count(),
        g.edge_count(),
        r2.degree_target_met,
        r2.after.tilde_t_doubled,
        b * b * (n - 4 * b)
    );
    Ok(())
}
