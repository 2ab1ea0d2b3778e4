//! Canonical labelling for graphs on at most 16 vertices.
//!
//! Individualization-refinement: the ordered partition is refined to an
//! equitable one by neighbour counts, the first non-singleton cell is
//! individualized vertex by vertex, and every discrete leaf yields a
//! relabelled adjacency certificate. The canonical form is the largest
//! certificate. Leaves that reproduce an earlier certificate give
//! automorphisms, which prune siblings in the same orbit of the pointwise
//! stabilizer of the current individualization sequence.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub const MAX_VERTICES: usize = 16;

/// Graph on at most 16 vertices with one `u16` adjacency row per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SmallGraph {
    n: u8,
    rows: [u16; MAX_VERTICES],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SmallGraph {
            n: n as u8,
            rows: [0; MAX_VERTICES],
        }
    }

    pub fn from_graph(graph: &Graph) -> Result<Self> {
        if graph.n() > MAX_VERTICES {
            return Err(Error::param(format!(
                "canonical labelling supports at most {MAX_VERTICES} vertices, got {}",
                graph.n()
            )));
        }
        let mut g = SmallGraph::empty(graph.n());
        for (u, v) in graph.edges() {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn to_graph(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n());
        for u in 0..self.n() {
            for v in bits(self.rows[u]).filter(|&v| v > u) {
                b.insert_unchecked(u, v);
            }
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn row(&self, v: usize) -> u16 {
        self.rows[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        (self.rows[u] & self.rows[v]).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.n()].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Appends a vertex adjacent to `neighbors`; it gets label `n`.
    pub fn with_vertex(&self, neighbors: u16) -> Self {
        let mut g = *self;
        let v = self.n();
        assert!(v < MAX_VERTICES);
        g.n += 1;
        g.rows[v] = neighbors;
        for u in bits(neighbors) {
            g.rows[u] |= 1 << v;
        }
        g
    }

    /// Deletes `v` and shifts the labels above it down by one.
    pub fn without_vertex(&self, v: usize) -> Self {
        let low = (1u16 << v) - 1;
        let squeeze = |row: u16| (row & low) | ((row >> 1) & !low);
        let mut g = SmallGraph::empty(self.n() - 1);
        for (i, u) in (0..self.n()).filter(|&u| u != v).enumerate() {
            g.rows[i] = squeeze(self.rows[u] & !(1 << v));
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[u8]) -> Self {
        let mut g = SmallGraph::empty(self.n());
        for u in 0..self.n() {
            for v in bits(self.rows[u]) {
                g.rows[perm[u] as usize] |= 1 << perm[v];
            }
        }
        g
    }

    pub fn book_number(&self) -> usize {
        (0..self.n())
            .flat_map(|u| bits(self.rows[u]).filter(move |&v| v > u).map(move |v| (u, v)))
            .map(|(u, v)| self.codegree(u, v))
            .max()
            .unwrap_or(0)
    }

    pub fn triangle_count(&self) -> u64 {
        let mut t = 0;
        for u in 0..self.n() {
            for v in bits(self.rows[u]).filter(|&v| v > u) {
                t += (self.rows[u] & self.rows[v] & !((2u16 << v) - 1)).count_ones() as u64;
            }
        }
        t
    }

    pub fn canonical(&self) -> Canonical {
        Canonizer::new(self).run()
    }
}

/// Iterates the set bits of a row.
#[inline]
pub fn bits(mut row: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (row != 0).then(|| {
            let b = row.trailing_zeros() as usize;
            row &= row - 1;
            b
        })
    })
}

/// Upper-triangle bit string of the canonically relabelled graph, in graph6
/// order, first pair most significant. Equal forms on equal `n` mean
/// isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u128,
}

#[derive(Clone, Copy, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: [u8; MAX_VERTICES],
}

impl Canonical {
    pub fn graph(&self, original: &SmallGraph) -> SmallGraph {
        original.permuted(&self.position[..original.n()])
    }
}

pub fn canonical_form(graph: &Graph) -> Result<CanonicalForm> {
    Ok(SmallGraph::from_graph(graph)?.canonical().form)
}

/// Canonically relabelled copy of `graph`.
pub fn canonical_graph(graph: &Graph) -> Result<Graph> {
    let small = SmallGraph::from_graph(graph)?;
    Ok(small.canonical().graph(&small).to_graph())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

struct Canonizer<'a> {
    g: &'a SmallGraph,
    n: usize,
    best: Option<(u128, [u8; MAX_VERTICES])>,
    first: Option<(u128, [u8; MAX_VERTICES])>,
    automorphisms: Vec<[u8; MAX_VERTICES]>,
}

impl<'a> Canonizer<'a> {
    fn new(g: &'a SmallGraph) -> Self {
        Canonizer {
            g,
            n: g.n(),
            best: None,
            first: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(mut self) -> Canonical {
        if self.n == 0 {
            return Canonical {
                form: CanonicalForm { n: 0, bits: 0 },
                position: [0; MAX_VERTICES],
            };
        }
        let all = if self.n == 16 { u16::MAX } else { (1u16 << self.n) - 1 };
        let mut seq = Vec::with_capacity(self.n);
        self.search(vec![all], &mut seq);
        let (bits, position) = self.best.expect("search reaches a leaf");
        Canonical {
            form: CanonicalForm {
                n: self.n as u8,
                bits,
            },
            position,
        }
    }

    /// Splits cells by neighbour counts into each splitter cell until the
    /// partition is equitable. Groups within a split cell are ordered by
    /// increasing count, which keeps the result label-invariant.
    fn refine(&self, cells: &mut Vec<u16>) {
        let mut changed = true;
        while changed {
            changed = false;
            'splitters: for w in 0..cells.len() {
                let splitter = cells[w];
                for x in 0..cells.len() {
                    let cell = cells[x];
                    if cell.count_ones() == 1 {
                        continue;
                    }
                    let mut groups: Vec<(u32, u16)> = Vec::new();
                    for v in bits(cell) {
                        let c = (self.g.rows[v] & splitter).count_ones();
                        match groups.iter_mut().find(|(k, _)| *k == c) {
                            Some((_, mask)) => *mask |= 1 << v,
                            None => groups.push((c, 1 << v)),
                        }
                    }
                    if groups.len() > 1 {
                        groups.sort_unstable_by_key(|&(k, _)| k);
                        cells.splice(x..=x, groups.into_iter().map(|(_, m)| m));
                        changed = true;
                        break 'splitters;
                    }
                }
            }
        }
    }

    fn leaf(&mut self, cells: &[u16]) {
        let mut position = [0u8; MAX_VERTICES];
        let mut inverse = [0u8; MAX_VERTICES];
        for (i, &cell) in cells.iter().enumerate() {
            let v = cell.trailing_zeros() as usize;
            position[v] = i as u8;
            inverse[i] = v as u8;
        }
        let mut cert = 0u128;
        for j in 1..self.n {
            let row = self.g.rows[inverse[j] as usize];
            for &vi in &inverse[..j] {
                cert = (cert << 1) | u128::from(row >> vi & 1);
            }
        }
        for reference in [self.first, self.best].into_iter().flatten() {
            if reference.0 == cert {
                // v ↦ reference⁻¹(position(v)) preserves adjacency.
                let mut ref_inverse = [0u8; MAX_VERTICES];
                for v in 0..self.n {
                    ref_inverse[reference.1[v] as usize] = v as u8;
                }
                let mut gamma = [0u8; MAX_VERTICES];
                for v in 0..self.n {
                    gamma[v] = ref_inverse[position[v] as usize];
                }
                if gamma[..self.n].iter().enumerate().any(|(v, &g)| g as usize != v) {
                    self.automorphisms.push(gamma);
                }
            }
        }
        if self.first.is_none() {
            self.first = Some((cert, position));
        }
        if self.best.is_none_or(|(b, _)| cert > b) {
            self.best = Some((cert, position));
        }
    }

    /// Orbit representative of `v` under the automorphisms found so far that
    /// fix `seq` pointwise.
    fn same_orbit(&self, seq: &[u8], v: usize, explored: &[usize]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if seq.iter().all(|&s| gamma[s as usize] == s) {
                any = true;
                for (x, &gx) in gamma.iter().enumerate().take(self.n) {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gx as usize));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }

    fn search(&mut self, mut cells: Vec<u16>, seq: &mut Vec<u8>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored = Vec::new();
        for v in bits(cell) {
            if self.same_orbit(seq, v, &explored) {
                continue;
            }
            let mut child = cells.clone();
            child.splice(target..=target, [1u16 << v, cell & !(1 << v)]);
            seq.push(v as u8);
            self.search(child, seq);
            seq.pop();
            explored.push(v);
        }
    }
}
