//! Simple undirected graphs on the dense vertex set `0..n`.
//!
//! A [`Graph`] is immutable once built; all mutation goes through
//! [`GraphBuilder`], which keeps the adjacency rows symmetric and loop-free.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.insert_unchecked(u, v);
            }
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        if n >= 3 {
            for u in 0..n {
                b.insert_unchecked(u, (u + 1) % n);
            }
        }
        b.build()
    }

    /// Complete bipartite graph with sides `0..left` and `left..left + right`.
    pub fn complete_bipartite(left: usize, right: usize) -> Self {
        let mut b = GraphBuilder::new(left + right);
        for u in 0..left {
            for v in left..left + right {
                b.insert_unchecked(u, v);
            }
        }
        b.build()
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Adjacency row of `v`. Panics if `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.rows[v].len())
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.codeg(u, v))
    }

    #[inline]
    pub(crate) fn codeg(&self, u: usize, v: usize) -> usize {
        self.rows[u].intersection_len(&self.rows[v])
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(BitSet::len).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().skip_while(move |&v| v <= u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self, vertices: &[usize]) -> Result<BitSet> {
        let mut set = BitSet::with_capacity(self.n);
        for &v in vertices {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &BitSet) -> usize {
        set.iter().map(|v| self.rows[v].intersection_len(set)).sum::<usize>() / 2
    }

    /// `e(X, Y)` for disjoint `X` and `Y`.
    pub fn cross_edges(&self, xs: &[usize], ys: &[usize]) -> Result<usize> {
        let x = self.vertex_set(xs)?;
        let y = self.vertex_set(ys)?;
        if let Some(v) = x.iter().find(|&v| y.contains(v)) {
            return Err(Error::OverlappingSets(v));
        }
        Ok(self.cross_edges_between(&x, &y))
    }

    pub(crate) fn cross_edges_between(&self, x: &BitSet, y: &BitSet) -> usize {
        x.iter().map(|v| self.rows[v].intersection_len(y)).sum()
    }

    /// Graph on the same vertex count with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::param(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = BitSet::with_capacity(self.n);
        for &p in perm {
            self.check_vertex(p)?;
            if !seen.insert(p) {
                return Err(Error::param(format!("{p} appears twice in permutation")));
            }
        }
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.insert_unchecked(perm[u], perm[v]);
        }
        Ok(b.build())
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(Error::SameVertex(u));
                }
                if self.adjacent(u, v) {
                    b.insert_unchecked(i, j);
                }
            }
        }
        Ok(b.build())
    }

    /// Proper 2-colouring of `G[set]`, if one exists. Colour classes are
    /// returned in ascending order; the class containing the smallest vertex
    /// of each component gets colour 0.
    pub fn two_coloring(&self, set: &BitSet) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for s in set {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for w in self.rows[u].iter().filter(|&w| set.contains(w)) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let (mut zero, mut one) = (Vec::new(), Vec::new());
        for v in set {
            if color[v] == 0 {
                zero.push(v);
            } else {
                one.push(v);
            }
        }
        Some((zero, one))
    }

    pub fn is_bipartite(&self) -> bool {
        let all = BitSet::from_iter_with_capacity(self.n, 0..self.n);
        self.two_coloring(&all).is_some()
    }

    pub fn is_independent(&self, set: &BitSet) -> bool {
        set.iter().all(|v| self.rows[v].intersection_len(set) == 0)
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            n: self.n,
            m: self.m,
            rows: self.rows.clone(),
        }
    }

    /// Checks symmetry, loop-freeness and the cached edge count.
    pub fn check_invariants(&self) -> bool {
        let degree_sum: usize = self.rows.iter().map(BitSet::len).sum();
        degree_sum == 2 * self.m
            && self.rows.iter().enumerate().all(|(u, row)| {
                !row.contains(u) && row.iter().all(|v| v < self.n && self.rows[v].contains(u))
            })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable graph under construction.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    m: usize,
    rows: Vec<BitSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            m: 0,
            rows: vec![BitSet::with_capacity(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    /// Adds `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.insert_unchecked(u, v))
    }

    /// Removes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        let present = self.rows[u].remove(v);
        if present {
            self.rows[v].remove(u);
            self.m -= 1;
        }
        Ok(present)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        let fresh = self.rows[u].insert(v);
        if fresh {
            self.rows[v].insert(u);
            self.m += 1;
        }
        fresh
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            m: self.m,
            rows: self.rows,
        }
    }

    /// Snapshot of the current state without consuming the builder.
    pub fn snapshot(&self) -> Graph {
        self.clone().build()
    }
}
