//! Neighbourhood cuts and large induced bipartite subgraphs.
//!
//! [`lemma1_cut`] splits the vertex set as `N(x)` versus its complement for
//! the best pivot `x`; averaging over pivots shows the best one leaves at most
//! `m - 4m²/n² + 6t/n` edges inside the two sides. [`lemma2_extract`] refines
//! such a cut into two independent sets by dropping the vertices that see too
//! little of the opposite side.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::census;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub pivot: usize,
    /// `N(pivot)`.
    pub side_n: Vec<usize>,
    /// Everything else, including the pivot.
    pub side_rest: Vec<usize>,
    /// `e(side_n) + e(side_rest)`.
    pub deleted_edges: usize,
    #[serde(with = "rational::as_string")]
    pub bound: Rational,
}

impl CutResult {
    pub fn within_bound(&self) -> bool {
        rational::int(self.deleted_edges) <= self.bound
    }
}

/// `m - 4m²/n² + 6t/n`.
pub fn lemma1_bound(n: usize, m: usize, t: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::param("graph has no vertices"));
    }
    let (n, m, t) = (n as i128, m as i128, t as i128);
    Ok(Rational::from_integer(m) - Rational::new(4 * m * m, n * n) + Rational::new(6 * t, n))
}

fn interior_edges(graph: &Graph, pivot: usize) -> usize {
    let inside = graph.neighbors(pivot);
    let mut outside = BitSet::from_iter_with_capacity(graph.n(), 0..graph.n());
    outside.difference_with(inside);
    graph.edges_within(inside) + graph.edges_within(&outside)
}

/// Tries every pivot and keeps the one with the fewest interior edges,
/// smallest label on ties.
pub fn lemma1_cut(graph: &Graph) -> Result<CutResult> {
    let n = graph.n();
    let bound = lemma1_bound(n, graph.edge_count(), census::triangle_count(graph))?;
    let (deleted_edges, pivot) = (0..n)
        .into_par_iter()
        .map(|x| (interior_edges(graph, x), x))
        .min()
        .expect("n >= 1");
    let side_n: Vec<usize> = graph.neighbors(pivot).iter().collect();
    let side_rest = (0..n).filter(|&v| !graph.adjacent(pivot, v)).collect();
    Ok(CutResult {
        pivot,
        side_n,
        side_rest,
        deleted_edges,
        bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionResult {
    pub a0: Vec<usize>,
    pub b0: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Vertices outside `A ∪ B`, ascending.
    pub removed: Vec<usize>,
    #[serde(with = "rational::as_string")]
    pub c: Rational,
    pub b_cap: usize,
    /// All of `m >= n²/4`, `t <= c²n³/24`, `b(G) <= b_cap` and
    /// `b_cap <= (1/2 - c)n` held.
    pub guarantee_applies: bool,
    /// `48t / (c n²)`.
    #[serde(with = "rational::as_string")]
    pub removal_bound: Rational,
    /// Vertices dropped after the degree filter to keep `A` and `B`
    /// independent (only nonempty when `b(G) > b_cap`).
    pub independence_repairs: Vec<usize>,
}

impl ExtractionResult {
    pub fn removal_within_bound(&self) -> bool {
        rational::int(self.removed.len()) <= self.removal_bound
    }
}

/// Removes highest internal degree first (smallest label on ties) until
/// `set` is independent, then re-admits removed vertices in ascending order
/// when they have no neighbour left in the set.
fn greedy_independent(graph: &Graph, set: &mut BitSet) -> Vec<usize> {
    let mut dropped = Vec::new();
    loop {
        let worst = set
            .iter()
            .map(|v| (graph.neighbors(v).intersection_len(set), v))
            .filter(|&(d, _)| d > 0)
            .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        match worst {
            Some((_, v)) => {
                set.remove(v);
                dropped.push(v);
            }
            None => break,
        }
    }
    dropped.sort_unstable();
    dropped.retain(|&v| {
        if graph.neighbors(v).intersection_len(set) == 0 {
            set.insert(v);
            false
        } else {
            true
        }
    });
    dropped
}

fn heavy_side(graph: &Graph, side: &[usize], other: &BitSet, b_cap: usize) -> BitSet {
    let threshold = b_cap + other.len();
    BitSet::from_iter_with_capacity(
        graph.n(),
        side.iter()
            .copied()
            .filter(|&v| 2 * graph.neighbors(v).intersection_len(other) > threshold),
    )
}

pub fn lemma2_extract(graph: &Graph, c: Rational, b_cap: usize) -> Result<ExtractionResult> {
    let half = Rational::new(1, 2);
    if c <= Rational::from_integer(0) || c >= half {
        return Err(Error::param(format!("c must lie in (0, 1/2), got {c}")));
    }
    let cut = lemma1_cut(graph)?;
    let n = graph.n();
    let a0_set = graph.vertex_set(&cut.side_n)?;
    let b0_set = graph.vertex_set(&cut.side_rest)?;

    let mut a_set = heavy_side(graph, &cut.side_n, &b0_set, b_cap);
    let mut b_set = heavy_side(graph, &cut.side_rest, &a0_set, b_cap);
    let mut independence_repairs = greedy_independent(graph, &mut a_set);
    independence_repairs.extend(greedy_independent(graph, &mut b_set));
    independence_repairs.sort_unstable();

    let t = census::triangle_count(graph) as i128;
    let m = graph.edge_count() as i128;
    let ni = n as i128;
    let n_r = Rational::from_integer(ni);
    let book = census::book_number(graph);
    let guarantee_applies = 4 * m >= ni * ni
        && Rational::from_integer(24 * t) <= c * c * n_r * n_r * n_r
        && book <= b_cap
        && rational::int(b_cap) <= (half - c) * n_r;
    let removal_bound = Rational::from_integer(48 * t) / (c * n_r * n_r);

    let removed = (0..n)
        .filter(|&v| !a_set.contains(v) && !b_set.contains(v))
        .collect();
    Ok(ExtractionResult {
        a0: cut.side_n,
        b0: cut.side_rest,
        a: a_set.iter().collect(),
        b: b_set.iter().collect(),
        removed,
        c,
        b_cap,
        guarantee_applies,
        removal_bound,
        independence_repairs,
    })
}
