mod common;

use bookgraph::surgery::{self, Move, TriPartition};
use bookgraph::{census, Graph};
use common::{gnp, surgery_instance};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_partition(n: usize, rng: &mut impl Rng) -> TriPartition {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    let i = rng.gen_range(0..=n);
    let j = rng.gen_range(i..=n);
    TriPartition::new(n, v[..i].to_vec(), v[i..j].to_vec(), v[j..].to_vec()).unwrap()
}

fn complete_a_to_b(g: &Graph, p: &TriPartition) -> Graph {
    let mut b = g.to_builder();
    for &u in &p.a {
        for &v in &p.b {
            b.add_edge(u, v).unwrap();
        }
    }
    b.build()
}

proptest! {
    #[test]
    fn triangle_types_sum_to_total(n in 1usize..=24, p in 0.0f64..1.0, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gnp(n, p, &mut rng);
        let part = random_partition(n, &mut rng);
        let t = surgery::classify_triangles(&g, &part).unwrap();
        prop_assert_eq!(t.iter().sum::<u64>(), census::triangle_count(&g));
        if part.is_proper(&g).unwrap() {
            prop_assert_eq!(t[0], 0);
        }
        if let Ok(bar_b) = surgery::bar_b(&g, &part) {
            let cross = surgery::cross_edges(&g, &part).unwrap() as i128;
            prop_assert_eq!(bar_b * cross, (2 * (t[1] + t[2]) as i128).into());
            prop_assert!(bar_b <= (census::book_number(&g) as i128).into());
        }
    }

    #[test]
    fn tilde_t_below_t_prime_when_complete(n in 1usize..=24, p in 0.0f64..1.0, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let part = random_partition(n, &mut rng);
        let g = complete_a_to_b(&gnp(n, p, &mut rng), &part);
        let t = surgery::classify_triangles(&g, &part).unwrap();
        let doubled = surgery::tilde_t_doubled(&g, &part).unwrap();
        prop_assert!(2 * (t[1] + t[2]) as i128 >= doubled, "2t' = {} < 2t~ = {}", 2 * (t[1] + t[2]), doubled);
    }

    #[test]
    fn surgeries_meet_contracts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, part, b_cap) = surgery_instance(&mut rng, 24);
        let Ok((g1, r1)) = surgery::to_g1(&g, &part, b_cap) else { return Ok(()) };
        prop_assert_eq!(g1.edge_count(), g.edge_count());
        prop_assert!(part.a.iter().all(|&u| part.b.iter().all(|&v| g1.adjacent(u, v))));
        prop_assert_eq!(r1.s, r1.added.len());
        prop_assert_eq!(r1.s, r1.deleted.len());
        let Ok((g2, r2)) = surgery::to_g2(&g1, &part, b_cap) else { return Ok(()) };
        prop_assert_eq!(g2.edge_count(), g1.edge_count());
        prop_assert!(r2.degree_target_met);
        prop_assert!(r2.moves.iter().all(Move::delta_matches));
        prop_assert!(r2.after.cross_edges >= r2.before.cross_edges);
    }
}

#[test]
fn surgery_is_deterministic_and_infeasibility_is_reported() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut infeasible = 0;
    for _ in 0..200 {
        let (g, part, b_cap) = surgery_instance(&mut rng, 24);
        let first = surgery::to_g1(&g, &part, b_cap);
        assert_eq!(first, surgery::to_g1(&g, &part, b_cap));
        match first {
            Ok((g1, _)) => {
                if surgery::to_g2(&g1, &part, b_cap).is_err() {
                    infeasible += 1;
                }
            }
            Err(_) => infeasible += 1,
        }
    }
    assert!(infeasible < 200);
}

#[test]
fn exact_bipartite_search_is_maximum() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(1..=9);
        let g = gnp(n, 0.5, &mut rng);
        let part = surgery::max_induced_bipartite(&g).unwrap();
        assert!(part.is_proper(&g).unwrap());
        // Oracle: largest vertex subset whose induced graph is bipartite.
        let best = (0u32..1 << n)
            .filter(|&mask| {
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                g.induced(&set).unwrap().is_bipartite()
            })
            .map(u32::count_ones)
            .max()
            .unwrap();
        assert_eq!((part.a.len() + part.b.len()) as u32, best);
    }
}
