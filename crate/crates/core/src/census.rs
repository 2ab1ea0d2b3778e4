//! Exact triangle and book statistics, plus the classical pointwise
//! inequalities that hold for every graph (or every graph above the
//! Mantel threshold).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;

/// Number of triangles, counted once per edge `uv` (u < v) over common
/// neighbours `w > v`.
pub fn triangle_count(graph: &Graph) -> u64 {
    let mut total = 0u64;
    for u in 0..graph.n() {
        let row = graph.neighbors(u);
        for v in row.iter().filter(|&v| v > u) {
            total += row.intersection_len_above(graph.neighbors(v), v) as u64;
        }
    }
    total
}

/// Per-edge triangle counts and derived statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookProfile {
    /// Codegree of every edge `(u, v)`, `u < v`.
    pub per_edge: BTreeMap<(usize, usize), usize>,
    /// Largest book; 0 for edgeless or triangle-free graphs.
    pub book_number: usize,
    pub triangle_count: u64,
    pub degree_square_sum: u64,
    pub min_degree: usize,
    pub max_degree: usize,
}

pub fn book_profile(graph: &Graph) -> BookProfile {
    let per_edge: BTreeMap<_, _> = graph
        .edges()
        .map(|(u, v)| ((u, v), graph.codeg(u, v)))
        .collect();
    let book_number = per_edge.values().copied().max().unwrap_or(0);
    let degrees = graph.degrees();
    BookProfile {
        book_number,
        triangle_count: triangle_count(graph),
        degree_square_sum: degrees.iter().map(|&d| (d * d) as u64).sum(),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        per_edge,
    }
}

/// `b(G)` without materializing the per-edge map.
pub fn book_number(graph: &Graph) -> usize {
    graph
        .edges()
        .map(|(u, v)| graph.codeg(u, v))
        .max()
        .unwrap_or(0)
}

pub fn degree_square_sum(graph: &Graph) -> u64 {
    graph.degrees().iter().map(|&d| (d * d) as u64).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
}

/// `(6b - n) t >= b (Σ d(v)² - n m)` with `b = b(G)`.
pub fn bn_inequality_check(graph: &Graph) -> InequalityCheck {
    let b = book_number(graph) as i128;
    let n = graph.n() as i128;
    let m = graph.edge_count() as i128;
    let t = triangle_count(graph) as i128;
    let lhs = (6 * b - n) * t;
    let rhs = b * (degree_square_sum(graph) as i128 - n * m);
    InequalityCheck {
        lhs,
        rhs,
        holds: lhs >= rhs,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCheck {
    /// The graph has at most `⌊n²/4⌋` edges.
    NotApplicable,
    Holds,
    Violated,
}

impl BoundCheck {
    fn from_bool(ok: bool) -> Self {
        if ok {
            BoundCheck::Holds
        } else {
            BoundCheck::Violated
        }
    }

    pub fn is_violated(self) -> bool {
        self == BoundCheck::Violated
    }
}

pub fn above_mantel(graph: &Graph) -> bool {
    let n = graph.n();
    graph.edge_count() > n * n / 4
}

/// At least `⌊n/2⌋` triangles once `m > ⌊n²/4⌋`.
pub fn rademacher_check(graph: &Graph) -> BoundCheck {
    if !above_mantel(graph) {
        return BoundCheck::NotApplicable;
    }
    BoundCheck::from_bool(triangle_count(graph) >= (graph.n() / 2) as u64)
}

/// `6 b(G) >= n` once `m > ⌊n²/4⌋`.
pub fn edwards_check(graph: &Graph) -> BoundCheck {
    if !above_mantel(graph) {
        return BoundCheck::NotApplicable;
    }
    BoundCheck::from_bool(6 * book_number(graph) >= graph.n())
}

/// Summary emitted by the `stats` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub triangles: u64,
    pub book_number: usize,
    pub degree_square_sum: u64,
    pub bn_lhs: i128,
    pub bn_rhs: i128,
}

impl GraphStats {
    pub fn of(graph: &Graph) -> Self {
        let profile = book_profile(graph);
        let bn = bn_inequality_check(graph);
        GraphStats {
            n: graph.n(),
            m: graph.edge_count(),
            triangles: profile.triangle_count,
            book_number: profile.book_number,
            degree_square_sum: profile.degree_square_sum,
            bn_lhs: bn.lhs,
            bn_rhs: bn.rhs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_counts() {
        assert_eq!(triangle_count(&Graph::complete(4)), 4);
        assert_eq!(triangle_count(&Graph::complete_bipartite(3, 4)), 0);
        assert_eq!(triangle_count(&Graph::complete(70)), 70 * 69 * 68 / 6);
        assert_eq!(triangle_count(&Graph::empty(0)), 0);
    }

    #[test]
    fn book_numbers() {
        assert_eq!(book_profile(&Graph::complete(5)).book_number, 3);
        assert_eq!(book_profile(&Graph::cycle(5)).book_number, 0);
        assert_eq!(book_profile(&Graph::empty(3)).book_number, 0);
        let p = book_profile(&Graph::complete(4));
        assert_eq!(p.per_edge.len(), 6);
        assert_eq!(p.degree_square_sum, 36);
    }

    #[test]
    fn bn_inequality_examples() {
        let k3 = bn_inequality_check(&Graph::complete(3));
        assert_eq!((k3.lhs, k3.rhs, k3.holds), (3, 3, true));
        let k22 = bn_inequality_check(&Graph::complete_bipartite(2, 2));
        assert_eq!((k22.lhs, k22.rhs, k22.holds), (0, 0, true));
        let k4 = bn_inequality_check(&Graph::complete(4));
        assert_eq!((k4.lhs, k4.rhs, k4.holds), (32, 24, true));
    }

    #[test]
    fn classical_checks() {
        // K_{3,3} plus an edge inside one side.
        let mut b = Graph::complete_bipartite(3, 3).to_builder();
        b.add_edge(0, 1).unwrap();
        let g = b.build();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(triangle_count(&g), 3);
        assert_eq!(book_number(&g), 3);
        assert_eq!(rademacher_check(&g), BoundCheck::Holds);
        assert_eq!(edwards_check(&g), BoundCheck::Holds);

        let k4 = Graph::complete(4);
        assert_eq!(rademacher_check(&k4), BoundCheck::Holds);
        assert_eq!(edwards_check(&k4), BoundCheck::Holds);

        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(rademacher_check(&k33), BoundCheck::NotApplicable);
        assert_eq!(edwards_check(&k33), BoundCheck::NotApplicable);
    }

    #[test]
    fn intersection_above_crosses_words() {
        let g = Graph::complete(130);
        assert_eq!(g.neighbors(0).intersection_len_above(g.neighbors(1), 63), 130 - 64);
        assert_eq!(g.neighbors(0).intersection_len_above(g.neighbors(1), 129), 0);
    }
}
