//! Brute-force oracles and seeded corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bookgraph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Triangles by scanning every vertex triple.
pub fn naive_triangles(g: &Graph) -> u64 {
    let n = g.n();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

pub fn naive_codegree(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.n()).filter(|&w| w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)).count()
}

/// Largest codegree over edges.
pub fn naive_book(g: &Graph) -> usize {
    let mut best = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.adjacent(u, v) {
                best = best.max(naive_codegree(g, u, v));
            }
        }
    }
    best
}

pub fn naive_degree_square_sum(g: &Graph) -> u64 {
    (0..g.n())
        .map(|v| (0..g.n()).filter(|&w| g.adjacent(v, w)).count() as u64)
        .map(|d| d * d)
        .sum()
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Adjacency bit string (upper triangle, row-major) of `g` relabelled by `perm`.
fn relabelled_bits(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut inverse = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inverse[p] = v;
    }
    let mut bits = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            bits = bits << 1 | u64::from(g.adjacent(inverse[i], inverse[j]));
        }
    }
    bits
}

/// Smallest relabelled bit string over all `n!` labellings; `n <= 8`.
pub fn brute_canonical(g: &Graph) -> (usize, u64) {
    assert!(g.n() <= 8);
    let mut best = u64::MAX;
    for_each_permutation(g.n(), |perm| best = best.min(relabelled_bits(g, perm)));
    (g.n(), best)
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && brute_canonical(a) == brute_canonical(b)
}

/// Graph on `n` vertices whose edges are the set bits of `mask` over the
/// pairs `(u, v)`, `u < v`, in row-major order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e)).unwrap()
}

/// One `(form, edges, book number)` per isomorphism class of labelled
/// graphs on `n <= 6` vertices.
pub fn brute_census(n: usize) -> Vec<((usize, u64), usize, usize)> {
    assert!(n <= 6);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs {
        let g = graph_from_mask(n, mask);
        let form = brute_canonical(&g);
        if seen.insert(form) {
            out.push((form, g.edge_count(), naive_book(&g)));
        }
    }
    out
}

/// Classes with at least `min_edges` edges and book number at most `max_book`.
pub fn brute_classes(census: &[((usize, u64), usize, usize)], min_edges: usize, max_book: Option<usize>) -> BTreeSet<(usize, u64)> {
    census
        .iter()
        .filter(|&&(_, m, b)| m >= min_edges && max_book.is_none_or(|cap| b <= cap))
        .map(|&(form, _, _)| form)
        .collect()
}

/// Erdős–Rényi `G(n, p)` from a seeded stream.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// `count` graphs with `n` uniform in `1..=n_max` and `p` cycling through
/// 0.2, 0.5, 0.8.
pub fn random_corpus(seed: u64, count: usize, n_max: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=n_max);
            gnp(n, [0.2, 0.5, 0.8][i % 3], &mut rng)
        })
        .collect()
}

/// Random proper tripartition instance: `A` and `B` independent and nearly
/// complete to each other, each `C` vertex with at most `b_cap` neighbours
/// per side, and random edges inside `C`. Vertex labels are shuffled.
pub fn surgery_instance(rng: &mut impl Rng, n_max: usize) -> (Graph, bookgraph::surgery::TriPartition, usize) {
    use rand::seq::SliceRandom;
    let b_cap = rng.gen_range(1..=3);
    let na = rng.gen_range(b_cap..=b_cap + 5);
    let nb = rng.gen_range(b_cap..=b_cap + 5);
    let nc = rng.gen_range(1..=(n_max - na - nb).clamp(1, 10));
    let n = na + nb + nc;
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let (a, rest) = labels.split_at(na);
    let (b, c) = rest.split_at(nb);
    let mut edges = Vec::new();
    let missing = rng.gen_range(0..=3);
    let mut ab: Vec<(usize, usize)> = a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))).collect();
    ab.shuffle(rng);
    edges.extend(ab.into_iter().skip(missing));
    for &v in c {
        for side in [a, b] {
            let k = rng.gen_range(0..=b_cap);
            edges.extend(side.choose_multiple(rng, k).map(|&u| (u, v)));
        }
    }
    let p_c = rng.gen_range(0.3..1.0);
    for (i, &u) in c.iter().enumerate() {
        for &v in &c[i + 1..] {
            if rng.gen_bool(p_c) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let p = bookgraph::surgery::TriPartition::new(n, a.to_vec(), b.to_vec(), c.to_vec()).unwrap();
    (g, p, b_cap)
}
