mod common;

use bookgraph::census::{self, BoundCheck};
use bookgraph::constructions::{prism_blowup, s_graph, PrismSpec};
use bookgraph::Graph;
use common::{gnp, naive_book, naive_degree_square_sum, naive_triangles, random_corpus};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #[test]
    fn triangles_match_triple_scan(g in arb_graph(30)) {
        prop_assert_eq!(census::triangle_count(&g), naive_triangles(&g));
    }

    #[test]
    fn profile_matches_oracles(g in arb_graph(25)) {
        let profile = census::book_profile(&g);
        prop_assert_eq!(profile.book_number, naive_book(&g));
        prop_assert_eq!(profile.degree_square_sum, naive_degree_square_sum(&g));
        // Each triangle is counted once per edge.
        let per_edge: usize = profile.per_edge.values().sum();
        prop_assert_eq!(per_edge as u64, 3 * profile.triangle_count);
        prop_assert_eq!(profile.per_edge.len(), g.edge_count());
    }

    #[test]
    fn bn_inequality_holds(g in arb_graph(30)) {
        let check = census::bn_inequality_check(&g);
        prop_assert!(check.holds, "lhs {} < rhs {}", check.lhs, check.rhs);
    }

    #[test]
    fn classical_bounds_above_mantel(g in arb_graph(20)) {
        let r = census::rademacher_check(&g);
        let e = census::edwards_check(&g);
        if census::above_mantel(&g) {
            prop_assert_eq!(r, BoundCheck::Holds);
            prop_assert_eq!(e, BoundCheck::Holds);
        } else {
            prop_assert_eq!(r, BoundCheck::NotApplicable);
            prop_assert_eq!(e, BoundCheck::NotApplicable);
        }
    }

    #[test]
    fn prism_blowup_formulas(sizes in prop::array::uniform6(0usize..6)) {
        let spec = PrismSpec::new(sizes);
        let g = prism_blowup(&spec);
        prop_assert_eq!(g.edge_count() as u64, spec.expected_edges());
        prop_assert_eq!(naive_triangles(&g), spec.expected_triangles());
        prop_assert_eq!(naive_book(&g), spec.expected_book_number());
    }
}

#[test]
fn frozen_censuses() {
    // Frozen from the triple-scan oracle.
    let k5 = Graph::complete(5);
    assert_eq!((census::triangle_count(&k5), census::book_number(&k5)), (10, 3));
    let s = s_graph(2, 9).unwrap();
    assert_eq!((naive_triangles(&s), naive_book(&s)), (4, 2));
    let stats = census::GraphStats::of(&Graph::complete(4));
    assert_eq!((stats.bn_lhs, stats.bn_rhs), (32, 24));
}

#[test]
fn seeded_corpus_agrees_with_oracles() {
    for g in random_corpus(7, 300, 24) {
        assert_eq!(census::triangle_count(&g), naive_triangles(&g));
        assert_eq!(census::book_number(&g), naive_book(&g));
    }
}
