mod common;

use bookgraph::bipartite::{lemma1_bound, lemma1_cut, lemma2_extract};
use bookgraph::rational::{self, Rational};
use bookgraph::{census, Graph};
use common::{gnp, naive_triangles};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Interior edges of the cut `N(x)` versus the rest, by pair scan.
fn naive_interior(g: &Graph, x: usize) -> usize {
    let side = |v: usize| g.adjacent(x, v);
    g.edges().filter(|&(u, v)| side(u) == side(v)).count()
}

/// `K_{h,h}` (or `K_{h,h+1}`) with `missing` cross edges removed and `extra`
/// edges added inside the parts.
fn near_bipartite(n: usize, missing: usize, extra: usize, rng: &mut impl Rng) -> Graph {
    let h = n / 2;
    let mut b = Graph::complete_bipartite(h, n - h).to_builder();
    for _ in 0..missing {
        let (u, v) = (rng.gen_range(0..h), rng.gen_range(h..n));
        b.remove_edge(u, v).unwrap();
    }
    for _ in 0..extra {
        let (lo, hi) = if rng.gen_bool(0.5) { (0, h) } else { (h, n) };
        let (u, v) = (rng.gen_range(lo..hi), rng.gen_range(lo..hi));
        if u != v {
            b.add_edge(u, v).unwrap();
        }
    }
    b.build()
}

proptest! {
    #[test]
    fn cut_is_best_pivot_and_within_bound(n in 1usize..=30, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let cut = lemma1_cut(&g).unwrap();
        let best = (0..n).map(|x| naive_interior(&g, x)).min().unwrap();
        prop_assert_eq!(cut.deleted_edges, best);
        prop_assert_eq!(naive_interior(&g, cut.pivot), best);
        prop_assert!(cut.within_bound(), "{} > {}", cut.deleted_edges, cut.bound);
        prop_assert_eq!(cut.side_n.len() + cut.side_rest.len(), n);
    }

    #[test]
    fn extraction_sides_are_independent(n in 2usize..=30, p in 0.0f64..1.0, seed in any::<u64>(), b_cap in 0usize..8) {
        let g = gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let r = lemma2_extract(&g, Rational::new(1, 4), b_cap).unwrap();
        prop_assert!(g.is_independent(&g.vertex_set(&r.a).unwrap()));
        prop_assert!(g.is_independent(&g.vertex_set(&r.b).unwrap()));
        prop_assert_eq!(r.a.len() + r.b.len() + r.removed.len(), n);
        if census::book_number(&g) <= b_cap {
            prop_assert!(r.independence_repairs.is_empty());
        }
    }

    #[test]
    fn removal_bound_when_guaranteed(
        n in 8usize..=40,
        missing in 0usize..6,
        extra in 0usize..6,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = near_bipartite(n, missing, extra, &mut rng);
        let b_cap = census::book_number(&g);
        for c in [Rational::new(1, 10), Rational::new(1, 4), Rational::new(2, 5)] {
            let r = lemma2_extract(&g, c, b_cap).unwrap();
            if r.guarantee_applies {
                prop_assert!(r.removal_within_bound(), "removed {} > {}", r.removed.len(), r.removal_bound);
            }
        }
    }
}

#[test]
fn bound_is_exact_rational() {
    // C5: 5 - 4·25/25 + 0 = 1.
    assert_eq!(lemma1_bound(5, 5, 0).unwrap(), Rational::from_integer(1));
    // K4: 6 - 4·36/16 + 6·4/4 = 3.
    let k4 = Graph::complete(4);
    assert_eq!(lemma1_bound(4, 6, naive_triangles(&k4)).unwrap(), rational::int(3));
    assert_eq!(lemma1_bound(3, 1, 0).unwrap(), Rational::new(5, 9));
}
