//! Tripartition statistics and the two normalising surgeries.
//!
//! A [`TriPartition`] splits the vertices into `A`, `B` (meant to be the two
//! sides of a large induced bipartite subgraph) and the remainder `C`. A
//! triangle has type `i` when exactly `i` of its vertices lie in `C`;
//! `t' = t₁ + t₂`, `b̄ = 2t' / e(A∪B, C)`, and
//!
//! ```text
//! 2t̃ = -|C| e(A∪B, C) + Σ_{v∈C} (2 d_A(v) d_B(v) + d_C(v) d_{A∪B}(v)) + Σ_{u∈A∪B} d_C(u)²
//! ```
//!
//! [`to_g1`] completes `A` to `B` while keeping the edge count, and [`to_g2`]
//! then trades edges inside `C` for edges to `A ∪ B` until every `v ∈ C` has
//! exactly `b_cap` neighbours on each side.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::canon::{bits, SmallGraph, MAX_VERTICES};
use crate::census;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriPartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl TriPartition {
    /// Sorts the parts and checks that they partition `0..n`.
    pub fn new(n: usize, mut a: Vec<usize>, mut b: Vec<usize>, mut c: Vec<usize>) -> Result<Self> {
        for part in [&mut a, &mut b, &mut c] {
            part.sort_unstable();
        }
        let p = TriPartition { a, b, c };
        p.validate(n)?;
        Ok(p)
    }

    /// `A`, `B` as given and `C` everything else.
    pub fn with_rest(n: usize, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        let mut used = vec![false; n];
        for &v in a.iter().chain(&b) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            used[v] = true;
        }
        let c = (0..n).filter(|&v| !used[v]).collect();
        TriPartition::new(n, a, b, c)
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for &v in self.a.iter().chain(&self.b).chain(&self.c) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::OverlappingSets(v));
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::param(format!("vertex {missing} is in no part")));
        }
        Ok(())
    }

    /// `A` and `B` are both independent, so `G[A ∪ B]` is bipartite with
    /// these sides.
    pub fn is_proper(&self, graph: &Graph) -> Result<bool> {
        self.validate(graph.n())?;
        let sides = Sides::new(graph.n(), self);
        Ok(graph.is_independent(&sides.a) && graph.is_independent(&sides.b))
    }
}

struct Sides {
    a: BitSet,
    b: BitSet,
    c: BitSet,
    ab: BitSet,
}

impl Sides {
    fn new(n: usize, p: &TriPartition) -> Self {
        let a = BitSet::from_iter_with_capacity(n, p.a.iter().copied());
        let b = BitSet::from_iter_with_capacity(n, p.b.iter().copied());
        let c = BitSet::from_iter_with_capacity(n, p.c.iter().copied());
        let mut ab = a.clone();
        ab.union_with(&b);
        Sides { a, b, c, ab }
    }
}

trait Adjacency {
    fn nbrs(&self, v: usize) -> &BitSet;
}

impl Adjacency for Graph {
    fn nbrs(&self, v: usize) -> &BitSet {
        self.neighbors(v)
    }
}

impl Adjacency for GraphBuilder {
    fn nbrs(&self, v: usize) -> &BitSet {
        self.neighbors(v)
    }
}

fn d(g: &impl Adjacency, v: usize, side: &BitSet) -> usize {
    g.nbrs(v).intersection_len(side)
}

fn cross_ab_c(g: &impl Adjacency, s: &Sides) -> usize {
    s.c.iter().map(|v| d(g, v, &s.ab)).sum()
}

fn classify(g: &Graph, s: &Sides) -> [u64; 4] {
    let mut t = [0u64; 4];
    for u in 0..g.n() {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            for w in g.neighbors(u).iter().filter(|&w| w > v && g.adjacent(v, w)) {
                let in_c = [u, v, w].iter().filter(|&&x| s.c.contains(x)).count();
                t[in_c] += 1;
            }
        }
    }
    t
}

fn doubled_tilde_t(g: &impl Adjacency, s: &Sides) -> i128 {
    let c_size = s.c.len() as i128;
    let mut total = -c_size * cross_ab_c(g, s) as i128;
    for v in s.c.iter() {
        let (da, db, dc) = (d(g, v, &s.a) as i128, d(g, v, &s.b) as i128, d(g, v, &s.c) as i128);
        total += 2 * da * db + dc * (da + db);
    }
    for u in s.ab.iter() {
        let dc = d(g, u, &s.c) as i128;
        total += dc * dc;
    }
    total
}

/// `(D, d)`: the largest and smallest one-sided degree from `C`.
fn degree_extremes(g: &impl Adjacency, s: &Sides) -> (usize, usize) {
    let pairs = s.c.iter().map(|v| (d(g, v, &s.a), d(g, v, &s.b)));
    let big = pairs.clone().map(|(x, y)| x.max(y)).max().unwrap_or(0);
    let small = pairs.map(|(x, y)| x.min(y)).min().unwrap_or(0);
    (big, small)
}

fn prepare(graph: &Graph, p: &TriPartition) -> Result<Sides> {
    p.validate(graph.n())?;
    Ok(Sides::new(graph.n(), p))
}

/// Triangle counts `(t₀, t₁, t₂, t₃)` by number of vertices in `C`.
pub fn classify_triangles(graph: &Graph, p: &TriPartition) -> Result<[u64; 4]> {
    Ok(classify(graph, &prepare(graph, p)?))
}

/// `e(A ∪ B, C)`.
pub fn cross_edges(graph: &Graph, p: &TriPartition) -> Result<usize> {
    Ok(cross_ab_c(graph, &prepare(graph, p)?))
}

/// `2t' / e(A∪B, C)`.
pub fn bar_b(graph: &Graph, p: &TriPartition) -> Result<Rational> {
    let s = prepare(graph, p)?;
    let cross = cross_ab_c(graph, &s);
    if cross == 0 {
        return Err(Error::Undefined("b̄ needs at least one edge between A ∪ B and C".into()));
    }
    let t = classify(graph, &s);
    Ok(Rational::new(2 * (t[1] + t[2]) as i128, cross as i128))
}

pub fn tilde_t_doubled(graph: &Graph, p: &TriPartition) -> Result<i128> {
    Ok(doubled_tilde_t(graph, &prepare(graph, p)?))
}

pub fn tilde_t(graph: &Graph, p: &TriPartition) -> Result<Rational> {
    Ok(Rational::new(tilde_t_doubled(graph, p)?, 2))
}

/// Partition statistics of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Snapshot {
    pub edges: usize,
    pub triangles: u64,
    pub t_by_type: [u64; 4],
    pub t_prime: u64,
    pub cross_edges: usize,
    pub c_edges: usize,
    #[serde(with = "rational::option_as_string")]
    pub bar_b: Option<Rational>,
    pub tilde_t_doubled: i128,
    #[serde(rename = "D")]
    pub d_max: usize,
    pub d_min: usize,
    pub book_number: usize,
}

impl Snapshot {
    fn of(g: &Graph, s: &Sides) -> Self {
        let t_by_type = classify(g, s);
        let t_prime = t_by_type[1] + t_by_type[2];
        let cross = cross_ab_c(g, s);
        let (d_max, d_min) = degree_extremes(g, s);
        Snapshot {
            edges: g.edge_count(),
            triangles: t_by_type.iter().sum(),
            t_by_type,
            t_prime,
            cross_edges: cross,
            c_edges: g.edges_within(&s.c),
            bar_b: (cross > 0).then(|| Rational::new(2 * t_prime as i128, cross as i128)),
            tilde_t_doubled: doubled_tilde_t(g, s),
            d_max,
            d_min,
            book_number: census::book_number(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Delete,
    Add,
}

/// One edge change of the degree-balancing surgery with the change of `2t̃`
/// predicted from degrees before the move and observed by recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Move {
    pub kind: MoveKind,
    pub edge: (usize, usize),
    pub tilde_t_doubled_before: i128,
    pub predicted_delta: i128,
    pub tilde_t_doubled_after: i128,
}

impl Move {
    pub fn delta_matches(&self) -> bool {
        self.tilde_t_doubled_after - self.tilde_t_doubled_before == self.predicted_delta
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryReport {
    pub stage: String,
    pub b_cap: usize,
    /// Missing `A × B` edges added.
    pub s: usize,
    /// Edges deleted inside `C`.
    #[serde(rename = "moved_C_edges")]
    pub moved_c_edges: usize,
    pub added: Vec<(usize, usize)>,
    pub deleted: Vec<(usize, usize)>,
    pub before: Snapshot,
    #[serde(flatten)]
    pub after: Snapshot,
    /// `D <= b_cap` after the first stage, exact targets after the second.
    pub degree_target_met: bool,
    pub moves: Vec<Move>,
}

/// Completes `A` to `B`, then deletes as many `C`–`(A ∪ B)` edges, each from
/// the `C` vertex with the largest one-sided degree (smallest label on ties,
/// `A` before `B`) to its lowest-labelled neighbour on that side.
pub fn to_g1(graph: &Graph, p: &TriPartition, b_cap: usize) -> Result<(Graph, SurgeryReport)> {
    let sides = prepare(graph, p)?;
    if !(graph.is_independent(&sides.a) && graph.is_independent(&sides.b)) {
        return Err(Error::param("partition is not proper: A or B spans an edge"));
    }
    let missing: Vec<(usize, usize)> = p
        .a
        .iter()
        .flat_map(|&u| p.b.iter().map(move |&v| (u.min(v), u.max(v))))
        .filter(|&(u, v)| !graph.adjacent(u, v))
        .collect();
    let s = missing.len();
    let available = cross_ab_c(graph, &sides);
    if available < s {
        return Err(Error::Infeasible(format!(
            "{s} A×B edges are missing but only {available} edges join C to A ∪ B (short by {})",
            s - available
        )));
    }

    let mut work = graph.to_builder();
    for &(u, v) in &missing {
        work.insert_unchecked(u, v);
    }
    let mut deleted = Vec::with_capacity(s);
    for _ in 0..s {
        let (_, v, on_b) = sides
            .c
            .iter()
            .flat_map(|v| [(d(&work, v, &sides.a), v, false), (d(&work, v, &sides.b), v, true)])
            .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)).then(y.2.cmp(&x.2)))
            .expect("available >= s > 0 implies C is nonempty");
        let side = if on_b { &sides.b } else { &sides.a };
        let mut nbrs = work.neighbors(v).clone();
        nbrs.intersect_with(side);
        let u = nbrs.first().expect("chosen side has a neighbour");
        work.remove_edge(u, v)?;
        deleted.push((u.min(v), u.max(v)));
    }

    let g1 = work.build();
    let after = Snapshot::of(&g1, &sides);
    let report = SurgeryReport {
        stage: "g1".into(),
        b_cap,
        s,
        moved_c_edges: 0,
        added: missing,
        deleted,
        before: Snapshot::of(graph, &sides),
        degree_target_met: after.d_max <= b_cap,
        after,
        moves: Vec::new(),
    };
    Ok((g1, report))
}

/// Deletes edges inside `C` and adds the same number of `(A ∪ B) × C` edges
/// until `d_A(v) = d_B(v) = b_cap` for every `v ∈ C`.
///
/// Each move deletes the edge between the `C` vertex of largest `C`-degree
/// and its `C`-neighbour of largest `C`-degree, then gives the `C` vertex
/// with the largest deficit an edge to its lowest-labelled non-neighbour on
/// the deficient side. Ties go to the smallest label, and to `A` over `B`.
pub fn to_g2(g1: &Graph, p: &TriPartition, b_cap: usize) -> Result<(Graph, SurgeryReport)> {
    let sides = prepare(g1, p)?;
    if p.a.len() < b_cap || p.b.len() < b_cap {
        return Err(Error::Infeasible(format!(
            "|A| = {} and |B| = {} cannot both reach b_cap = {b_cap}",
            p.a.len(),
            p.b.len()
        )));
    }
    let mut deficit = 0;
    for v in sides.c.iter() {
        let (da, db) = (d(g1, v, &sides.a), d(g1, v, &sides.b));
        if da > b_cap || db > b_cap {
            return Err(Error::Infeasible(format!(
                "vertex {v} in C has (d_A, d_B) = ({da}, {db}) above b_cap = {b_cap}"
            )));
        }
        deficit += 2 * b_cap - da - db;
    }
    let c_edges = g1.edges_within(&sides.c);
    if c_edges < deficit {
        return Err(Error::Infeasible(format!(
            "{deficit} edges to A ∪ B are missing but C spans only {c_edges} edges (short by {})",
            deficit - c_edges
        )));
    }

    let c_size = sides.c.len() as i128;
    let mut work = g1.to_builder();
    let mut moves = Vec::with_capacity(2 * deficit);
    let mut added = Vec::with_capacity(deficit);
    let mut deleted = Vec::with_capacity(deficit);
    let mut current = doubled_tilde_t(&work, &sides);
    for _ in 0..deficit {
        let c_deg = |w: &GraphBuilder, v: usize| d(w, v, &sides.c);
        let v = sides
            .c
            .iter()
            .filter(|&v| c_deg(&work, v) > 0)
            .max_by(|&x, &y| c_deg(&work, x).cmp(&c_deg(&work, y)).then(y.cmp(&x)))
            .expect("C still spans an edge");
        let mut partners = work.neighbors(v).clone();
        partners.intersect_with(&sides.c);
        let v2 = partners
            .iter()
            .max_by(|&x, &y| c_deg(&work, x).cmp(&c_deg(&work, y)).then(y.cmp(&x)))
            .expect("v has a C-neighbour");
        let predicted = -((d(&work, v, &sides.ab) + d(&work, v2, &sides.ab)) as i128);
        work.remove_edge(v, v2)?;
        let next = doubled_tilde_t(&work, &sides);
        moves.push(Move {
            kind: MoveKind::Delete,
            edge: (v.min(v2), v.max(v2)),
            tilde_t_doubled_before: current,
            predicted_delta: predicted,
            tilde_t_doubled_after: next,
        });
        deleted.push((v.min(v2), v.max(v2)));
        current = next;

        let (_, w, on_b) = sides
            .c
            .iter()
            .flat_map(|w| {
                [
                    (b_cap - d(&work, w, &sides.a), w, false),
                    (b_cap - d(&work, w, &sides.b), w, true),
                ]
            })
            .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)).then(y.2.cmp(&x.2)))
            .expect("deficit remains");
        let (side, other) = if on_b { (&sides.b, &sides.a) } else { (&sides.a, &sides.b) };
        let u = side
            .iter()
            .find(|&u| !work.has_edge(u, w))
            .expect("side has at least b_cap vertices");
        let predicted = -c_size
            + 2 * d(&work, w, other) as i128
            + d(&work, w, &sides.c) as i128
            + 2 * d(&work, u, &sides.c) as i128
            + 1;
        work.insert_unchecked(u, w);
        let next = doubled_tilde_t(&work, &sides);
        moves.push(Move {
            kind: MoveKind::Add,
            edge: (u.min(w), u.max(w)),
            tilde_t_doubled_before: current,
            predicted_delta: predicted,
            tilde_t_doubled_after: next,
        });
        added.push((u.min(w), u.max(w)));
        current = next;
    }

    let g2 = work.build();
    let degree_target_met = sides
        .c
        .iter()
        .all(|v| d(&g2, v, &sides.a) == b_cap && d(&g2, v, &sides.b) == b_cap);
    let report = SurgeryReport {
        stage: "g2".into(),
        b_cap,
        s: 0,
        moved_c_edges: deleted.len(),
        added,
        deleted,
        before: Snapshot::of(g1, &sides),
        after: Snapshot::of(&g2, &sides),
        degree_target_met,
        moves,
    };
    Ok((g2, report))
}

/// Largest `A ∪ B` with `A`, `B` independent, by branch and bound over
/// assignments to `A`, `B` or neither. Vertex 0 goes to `A` when kept, and
/// the first optimum in search order (A, B, drop) is returned.
pub fn max_induced_bipartite(graph: &Graph) -> Result<TriPartition> {
    let n = graph.n();
    if n > MAX_VERTICES {
        return Err(Error::GuardRail(format!(
            "exact induced-bipartite search supports n <= {MAX_VERTICES}, got {n}"
        )));
    }
    let g = SmallGraph::from_graph(graph)?;
    struct Search<'a> {
        g: &'a SmallGraph,
        best: (u32, u16, u16),
    }
    impl Search<'_> {
        fn go(&mut self, v: usize, a: u16, b: u16) {
            let kept = (a | b).count_ones();
            if kept + (self.g.n() - v) as u32 <= self.best.0 {
                return;
            }
            if v == self.g.n() {
                self.best = (kept, a, b);
                return;
            }
            let row = self.g.row(v);
            if row & a == 0 {
                self.go(v + 1, a | 1 << v, b);
            }
            if row & b == 0 && a != 0 {
                self.go(v + 1, a, b | 1 << v);
            }
            self.go(v + 1, a, b);
        }
    }
    let mut search = Search { g: &g, best: (0, 0, 0) };
    if n > 0 {
        search.go(0, 0, 0);
    }
    let (_, a, b) = search.best;
    TriPartition::with_rest(n, bits(a).collect(), bits(b).collect())
}
