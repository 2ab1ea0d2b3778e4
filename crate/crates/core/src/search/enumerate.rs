//! Canonical augmentation by vertex addition.
//!
//! Every graph `C` on `k + 1` vertices has a canonical parent `C - v*`, where
//! `v*` is the minimum-degree vertex with the largest canonical label. A child
//! built from parent `P` by appending a vertex `v` is accepted only when
//! `C - v ≅ C - v*`, so each class is reached from exactly one parent class;
//! siblings of one parent are deduplicated by canonical form.
//!
//! Two filters prune the tree soundly:
//! * deleting a minimum-degree vertex from a graph with `m` edges on `j`
//!   vertices leaves at least `m - ⌊2m/j⌋` edges, so each level has an edge
//!   floor derived from the final threshold;
//! * the book number of an induced subgraph never exceeds that of the whole
//!   graph, so a parent whose edge codegree already exceeds the cap is dead.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{bits, CanonicalForm, SmallGraph, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::SearchParams;

/// Largest vertex count searched without an explicit override.
pub const EXHAUSTIVE_LIMIT: usize = 10;

/// Number of unlabelled graphs on `n` vertices (OEIS A000088), `n <= 16`.
const CLASS_COUNTS: [u128; 17] = [
    1,
    1,
    2,
    4,
    11,
    34,
    156,
    1044,
    12346,
    274668,
    12005168,
    1018997864,
    165091172592,
    50502031367952,
    29054155657235488,
    31426485969804308768,
    64001015704527557894928,
];

pub fn estimated_classes(n: usize) -> Option<u128> {
    CLASS_COUNTS.get(n).copied()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationFilter {
    pub n: usize,
    pub min_edges: usize,
    pub max_book: Option<usize>,
}

impl EnumerationFilter {
    pub fn all(n: usize) -> Self {
        EnumerationFilter {
            n,
            min_edges: 0,
            max_book: None,
        }
    }

    pub fn accepts(&self, g: &SmallGraph) -> bool {
        g.n() == self.n
            && g.edge_count() >= self.min_edges
            && self.max_book.is_none_or(|cap| g.book_number() <= cap)
    }
}

/// Edge floor for every level `0..=n` of the augmentation tree.
pub fn level_lower_bounds(n: usize, min_edges: usize) -> Vec<usize> {
    let mut bounds = vec![0; n + 1];
    if n == 0 {
        return bounds;
    }
    bounds[n] = min_edges;
    for j in (2..=n).rev() {
        bounds[j - 1] = bounds[j] - 2 * bounds[j] / j;
    }
    bounds[0] = 0;
    bounds
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub nodes: u64,
    pub edge_floor_cuts: u64,
    pub degree_cuts: u64,
    pub book_cuts: u64,
    pub non_canonical: u64,
    pub duplicates: u64,
}

impl EnumerationStats {
    fn merge(mut self, o: Self) -> Self {
        self.nodes += o.nodes;
        self.edge_floor_cuts += o.edge_floor_cuts;
        self.degree_cuts += o.degree_cuts;
        self.book_cuts += o.book_cuts;
        self.non_canonical += o.non_canonical;
        self.duplicates += o.duplicates;
        self
    }
}

struct Engine {
    n: usize,
    floors: Vec<usize>,
    max_book: Option<usize>,
}

impl Engine {
    fn new(filter: &EnumerationFilter) -> Self {
        Engine {
            n: filter.n,
            floors: level_lower_bounds(filter.n, filter.min_edges),
            max_book: filter.max_book,
        }
    }

    /// Accepted, pairwise non-isomorphic children of `parent`, canonically
    /// labelled, in ascending canonical order.
    fn children(&self, parent: &SmallGraph, stats: &mut EnumerationStats) -> Vec<SmallGraph> {
        let k = parent.n();
        let parent_edges = parent.edge_count();
        let parent_form = parent.canonical().form;
        let floor = self.floors[k + 1];
        let degrees: Vec<usize> = (0..k).map(|u| parent.degree(u)).collect();
        // saturated[u]: neighbours w of u whose edge already carries cap triangles.
        let saturated: Vec<u16> = match self.max_book {
            Some(cap) => (0..k)
                .map(|u| {
                    bits(parent.row(u))
                        .filter(|&w| parent.codegree(u, w) >= cap)
                        .fold(0u16, |acc, w| acc | 1 << w)
                })
                .collect(),
            None => vec![0; k],
        };

        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut out = Vec::new();
        for mask in 0..(1u32 << k) {
            let set = mask as u16;
            let s = set.count_ones() as usize;
            if parent_edges + s < floor {
                stats.edge_floor_cuts += 1;
                continue;
            }
            // The new vertex must be a minimum-degree vertex of the child.
            if (0..k).any(|u| degrees[u] + usize::from(set >> u & 1 == 1) < s) {
                stats.degree_cuts += 1;
                continue;
            }
            if let Some(cap) = self.max_book {
                let violates = bits(set).any(|u| {
                    (parent.row(u) & set).count_ones() as usize > cap
                        || parent.row(u) & set & saturated[u] != 0
                });
                if violates {
                    stats.book_cuts += 1;
                    continue;
                }
            }
            let child = parent.with_vertex(set);
            let canon = child.canonical();
            let star = (0..=k)
                .filter(|&v| child.degree(v) == s)
                .max_by_key(|&v| canon.position[v])
                .expect("new vertex has minimum degree");
            if star != k && child.without_vertex(star).canonical().form != parent_form {
                stats.non_canonical += 1;
                continue;
            }
            if !seen.insert(canon.form) {
                stats.duplicates += 1;
                continue;
            }
            stats.nodes += 1;
            out.push((canon.form, canon.graph(&child)));
        }
        out.sort_unstable_by_key(|(form, _)| *form);
        out.into_iter().map(|(_, g)| g).collect()
    }

    fn dfs<F: FnMut(&SmallGraph)>(&self, node: &SmallGraph, stats: &mut EnumerationStats, visit: &mut F) {
        if node.n() == self.n {
            visit(node);
            return;
        }
        for child in self.children(node, stats) {
            self.dfs(&child, stats, visit);
        }
    }

    /// Breadth-first expansion down to a level with enough independent
    /// subtrees to spread across workers. Depends only on the filter.
    fn frontier(&self, stats: &mut EnumerationStats) -> Vec<SmallGraph> {
        let mut level = vec![SmallGraph::empty(1)];
        while level[0].n() < self.n && level.len() < 64 && level[0].n() + 2 < self.n {
            level = level.iter().flat_map(|g| self.children(g, stats)).collect();
            if level.is_empty() {
                break;
            }
        }
        level
    }
}

fn check_size(n: usize, allow_large: bool) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::GuardRail(format!(
            "n = {n} exceeds the {MAX_VERTICES}-vertex limit of the canonical labeller"
        )));
    }
    if n > EXHAUSTIVE_LIMIT && !allow_large {
        let classes = estimated_classes(n).unwrap_or(u128::MAX);
        let labelled_bits = n * (n - 1) / 2;
        return Err(Error::GuardRail(format!(
            "n = {n} exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}: up to {classes} isomorphism \
             classes (2^{labelled_bits} labelled graphs) before pruning; pass the override to run anyway"
        )));
    }
    Ok(())
}

/// Parallel fold over every class accepted by `filter`. The reduction must be
/// associative and commutative; subtrees are processed in arbitrary order.
pub fn fold_classes<T, Id, F, R>(
    filter: &EnumerationFilter,
    allow_large: bool,
    identity: Id,
    fold: F,
    reduce: R,
) -> Result<(T, EnumerationStats)>
where
    T: Send,
    Id: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &SmallGraph) + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_size(filter.n, allow_large)?;
    if filter.n <= 1 {
        let mut acc = identity();
        let g = SmallGraph::empty(filter.n);
        if filter.accepts(&g) {
            fold(&mut acc, &g);
        }
        return Ok((acc, EnumerationStats::default()));
    }
    let engine = Engine::new(filter);
    let mut stats = EnumerationStats::default();
    let frontier = engine.frontier(&mut stats);
    let (acc, sub) = frontier
        .par_iter()
        .map(|root| {
            let mut acc = identity();
            let mut stats = EnumerationStats::default();
            engine.dfs(root, &mut stats, &mut |g| fold(&mut acc, g));
            (acc, stats)
        })
        .reduce(
            || (identity(), EnumerationStats::default()),
            |(a, sa), (b, sb)| (reduce(a, b), sa.merge(sb)),
        );
    Ok((acc, stats.merge(sub)))
}

/// One canonically labelled representative per isomorphism class accepted
/// by `filter`, sorted by canonical form.
pub fn enumerate_classes(filter: &EnumerationFilter, allow_large: bool) -> Result<Vec<SmallGraph>> {
    let (mut graphs, _) = fold_classes(
        filter,
        allow_large,
        Vec::new,
        |acc: &mut Vec<(CanonicalForm, SmallGraph)>, g| acc.push((g.canonical().form, *g)),
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    graphs.sort_unstable_by_key(|(form, _)| *form);
    Ok(graphs.into_iter().map(|(_, g)| g).collect())
}

/// Classes on `params.n` vertices meeting the edge threshold and book cap.
pub fn enumerate_filtered(params: &SearchParams) -> Result<Vec<Graph>> {
    Ok(enumerate_classes(&params.filter(), params.allow_large)?
        .iter()
        .map(SmallGraph::to_graph)
        .collect())
}
