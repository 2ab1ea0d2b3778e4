//! Blow-ups of the 3-prism and the graphs built from them.
//!
//! The 3-prism has vertices `u1 u2 u3 v1 v2 v3`: two triangles `u1u2u3`,
//! `v1v2v3` joined by the matching `u_i v_i`. A blow-up replaces each vertex
//! by an independent part. Parts are laid out contiguously in the order
//! `U1, U2, U3, V1, V2, V3`.

use std::ops::Range;

use serde::Serialize;

use crate::census;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Part sizes `(|U1|, |U2|, |U3|, |V1|, |V2|, |V3|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrismSpec {
    pub sizes: [usize; 6],
}

impl PrismSpec {
    pub fn new(sizes: [usize; 6]) -> Self {
        PrismSpec { sizes }
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Vertex ranges of the six parts.
    pub fn parts(&self) -> [Range<usize>; 6] {
        let mut start = 0;
        self.sizes.map(|size| {
            let r = start..start + size;
            start += size;
            r
        })
    }

    /// Whether prism vertices `i` and `j` (0..6, U's first) are adjacent.
    pub fn base_adjacent(i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let same_triangle = (i < 3) == (j < 3);
        same_triangle || i % 3 == j % 3
    }

    pub fn expected_edges(&self) -> u64 {
        let s = self.sizes.map(|x| x as u64);
        let mut total = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                if Self::base_adjacent(i, j) {
                    total += s[i] * s[j];
                }
            }
        }
        total
    }

    /// The prism's only triangles are its two faces.
    pub fn expected_triangles(&self) -> u64 {
        let s = self.sizes.map(|x| x as u64);
        s[0] * s[1] * s[2] + s[3] * s[4] * s[5]
    }

    /// Largest codegree over edges that actually exist. An edge between parts
    /// `i` and `j` lies in triangles only through the third vertex of the
    /// face they share, if any.
    pub fn expected_book_number(&self) -> usize {
        let s = self.sizes;
        let mut best = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                if !Self::base_adjacent(i, j) || s[i] == 0 || s[j] == 0 {
                    continue;
                }
                let common = (0..6)
                    .filter(|&k| k != i && k != j)
                    .filter(|&k| Self::base_adjacent(i, k) && Self::base_adjacent(j, k))
                    .map(|k| s[k])
                    .sum::<usize>();
                best = best.max(common);
            }
        }
        best
    }
}

pub fn prism_blowup(spec: &PrismSpec) -> Graph {
    let parts = spec.parts();
    let mut builder = GraphBuilder::new(spec.n());
    for i in 0..6 {
        for j in i + 1..6 {
            if !PrismSpec::base_adjacent(i, j) {
                continue;
            }
            for u in parts[i].clone() {
                for v in parts[j].clone() {
                    builder.insert_unchecked(u, v);
                }
            }
        }
    }
    builder.build()
}

/// `K_{⌊n/2⌋, ⌈n/2⌉}`.
pub fn balanced_bipartite(n: usize) -> Graph {
    Graph::complete_bipartite(n / 2, n - n / 2)
}

/// Part sizes of `S_{b,n}`: four parts of size `b`, and `U3`, `V3` splitting
/// the remaining `n - 4b` vertices as `⌊·/2⌋`, `⌈·/2⌉`.
pub fn s_graph_spec(b: usize, n: usize) -> Result<PrismSpec> {
    let rest = n
        .checked_sub(4 * b)
        .ok_or_else(|| Error::param(format!("S_(b,n) needs 4b <= n, got b = {b}, n = {n}")))?;
    Ok(PrismSpec::new([b, b, rest / 2, b, b, rest - rest / 2]))
}

pub fn s_graph(b: usize, n: usize) -> Result<Graph> {
    Ok(prism_blowup(&s_graph_spec(b, n)?))
}

/// `b²(n - 4b)`.
pub fn s_graph_triangles(b: usize, n: usize) -> u64 {
    (b * b) as u64 * n.saturating_sub(4 * b) as u64
}

/// True book number of `S_{b,n}`: `max(b, ⌈(n-4b)/2⌉)` when the graph has
/// triangles, and 0 in the two bipartite cases `b = 0` and `4b = n`.
pub fn s_graph_book_number(b: usize, n: usize) -> usize {
    let rest = n.saturating_sub(4 * b);
    if b == 0 || rest == 0 {
        0
    } else {
        b.max(rest.div_ceil(2))
    }
}

/// Output of [`mubayi_upper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MubayiUpper {
    pub graph: Graph,
    pub spec: PrismSpec,
    /// Closed-form triangle count the construction attains.
    pub expected_triangles: u64,
    /// Edges removed from the shifted blow-up, each in `b + 1` triangles.
    pub deleted_edges: Vec<(usize, usize)>,
    pub pre_deletion_edges: u64,
    pub pre_deletion_triangles: u64,
}

/// `b²(n-4b) + n - 2(b+1)` for even `n`, `b²(n-4b) + n - 2b - (b+1)` for odd.
pub fn mubayi_upper_triangles(b: usize, n: usize) -> u64 {
    let base = s_graph_triangles(b, n);
    if n.is_multiple_of(2) {
        base + n as u64 - 2 * (b as u64 + 1)
    } else {
        base + n as u64 - 2 * b as u64 - (b as u64 + 1)
    }
}

/// Shifted blow-up: one vertex moved into each `U_i` from the matching `V_i`
/// of `S_{b,n}`, followed by deleting two `U1×U3` edges sharing their `U1`
/// endpoint (even `n`) or one such edge (odd `n`). Every `U1×U3` edge lies in
/// exactly `|U2| = b + 1` triangles, and `U3` is independent so the two
/// deleted edges share no triangle.
///
/// Requires `n/6 <= b < n/4` and `b >= 1`.
pub fn mubayi_upper(b: usize, n: usize) -> Result<MubayiUpper> {
    if b == 0 || 6 * b < n || 4 * b >= n {
        return Err(Error::param(format!(
            "shifted blow-up needs 1 <= b and n/6 <= b < n/4, got b = {b}, n = {n}"
        )));
    }
    let base = s_graph_spec(b, n)?;
    let s = base.sizes;
    // Every V_i of S_{b,n} must be nonempty to give up a vertex.
    if s[3..].contains(&0) {
        return Err(Error::param(format!("S_({b},{n}) has an empty V part")));
    }
    let spec = PrismSpec::new([s[0] + 1, s[1] + 1, s[2] + 1, s[3] - 1, s[4] - 1, s[5] - 1]);
    let shifted = prism_blowup(&spec);
    let pre_deletion_edges = shifted.edge_count() as u64;
    let pre_deletion_triangles = census::triangle_count(&shifted);

    let parts = spec.parts();
    let pivot = parts[0].start;
    let deletions = if n.is_multiple_of(2) { 2 } else { 1 };
    if parts[2].len() < deletions {
        return Err(Error::Infeasible(format!(
            "U3 has {} vertices, need {deletions}",
            parts[2].len()
        )));
    }
    let deleted_edges: Vec<_> = parts[2].clone().take(deletions).map(|w| (pivot, w)).collect();
    let mut builder = shifted.to_builder();
    for &(u, w) in &deleted_edges {
        builder.remove_edge(u, w)?;
    }

    Ok(MubayiUpper {
        graph: builder.build(),
        spec,
        expected_triangles: mubayi_upper_triangles(b, n),
        deleted_edges,
        pre_deletion_edges,
        pre_deletion_triangles,
    })
}

/// Sidecar statistics emitted alongside a constructed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub kind: &'static str,
    pub part_sizes: [usize; 6],
    pub n: usize,
    pub edges: usize,
    pub triangles: u64,
    pub book: usize,
    pub expected_edges: u64,
    pub expected_triangles: u64,
    pub expected_book: Option<usize>,
    pub deleted_edges: Vec<(usize, usize)>,
    pub notes: Vec<String>,
}

impl ConstructionReport {
    fn measured(kind: &'static str, spec: &PrismSpec, graph: &Graph) -> Self {
        let profile = census::book_profile(graph);
        ConstructionReport {
            kind,
            part_sizes: spec.sizes,
            n: graph.n(),
            edges: graph.edge_count(),
            triangles: profile.triangle_count,
            book: profile.book_number,
            expected_edges: spec.expected_edges(),
            expected_triangles: spec.expected_triangles(),
            expected_book: Some(spec.expected_book_number()),
            deleted_edges: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn for_prism(spec: &PrismSpec, graph: &Graph) -> Self {
        Self::measured("prism", spec, graph)
    }

    pub fn for_s_graph(b: usize, n: usize, graph: &Graph) -> Result<Self> {
        let spec = s_graph_spec(b, n)?;
        let mut report = Self::measured("s-graph", &spec, graph);
        report.expected_edges = (n * n / 4) as u64;
        report.expected_triangles = s_graph_triangles(b, n);
        report.expected_book = Some(s_graph_book_number(b, n));
        Ok(report)
    }

    pub fn for_mubayi(b: usize, n: usize, built: &MubayiUpper) -> Self {
        let mut report = Self::measured("mubayi-upper", &built.spec, &built.graph);
        report.expected_edges = (n * n / 4 + 1) as u64;
        report.expected_triangles = built.expected_triangles;
        report.expected_book = None;
        report.deleted_edges = built.deleted_edges.clone();
        report.notes = vec![
            format!("book number bound: <= {}", b + 1),
            "V parts lose their highest-labelled vertex; any choice gives an isomorphic graph".into(),
            format!(
                "deleted {} edge(s) from U1 vertex {} into U3",
                built.deleted_edges.len(),
                built.spec.parts()[0].start
            ),
        ];
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{book_number, triangle_count};

    #[test]
    fn balanced_bipartite_examples() {
        let g = balanced_bipartite(4);
        assert_eq!((g.edge_count(), triangle_count(&g)), (4, 0));
        assert_eq!(balanced_bipartite(9).edge_count(), 20);
        assert_eq!(balanced_bipartite(1).edge_count(), 0);
        assert_eq!(balanced_bipartite(1).n(), 1);
    }

    #[test]
    fn prism_itself() {
        let g = prism_blowup(&PrismSpec::new([1; 6]));
        assert_eq!((g.n(), g.edge_count(), triangle_count(&g)), (6, 9, 2));
    }

    #[test]
    fn equal_parts_blowup() {
        let spec = PrismSpec::new([2; 6]);
        let g = prism_blowup(&spec);
        assert_eq!((g.n(), g.edge_count(), triangle_count(&g)), (12, 36, 16));
        assert_eq!(spec.expected_triangles(), 16);
    }

    #[test]
    fn s_graph_examples() {
        assert_eq!(s_graph(0, 7).unwrap(), balanced_bipartite(7));
        let g = s_graph(2, 9).unwrap();
        assert_eq!(g.edge_count(), 20);
        assert_eq!(triangle_count(&g), 4);
        assert_eq!(book_number(&g), 2);
        assert_eq!(s_graph_spec(2, 9).unwrap().sizes, [2, 2, 0, 2, 2, 1]);

        let g = s_graph(3, 12).unwrap();
        assert_eq!((g.edge_count(), triangle_count(&g)), (36, 0));
        assert!(g.is_bipartite());
        assert_eq!(s_graph_book_number(3, 12), 0);

        assert!(matches!(s_graph(3, 11), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn s_graph_cross_edges() {
        let g = s_graph(2, 9).unwrap();
        let parts = s_graph_spec(2, 9).unwrap().parts();
        let u1: Vec<_> = parts[0].clone().collect();
        let v1: Vec<_> = parts[3].clone().collect();
        assert_eq!(g.cross_edges(&u1, &v1).unwrap(), 4);
    }

    #[test]
    fn mubayi_even() {
        let built = mubayi_upper(2, 10).unwrap();
        assert_eq!(built.spec.sizes, [3, 3, 2, 1, 1, 0]);
        assert_eq!((built.pre_deletion_edges, built.pre_deletion_triangles), (28, 18));
        assert_eq!(built.graph.edge_count(), 26);
        assert_eq!(triangle_count(&built.graph), 12);
        assert_eq!(built.expected_triangles, 12);
        assert_eq!(book_number(&built.graph), 3);
        assert_eq!(built.deleted_edges, vec![(0, 6), (0, 7)]);
    }

    #[test]
    fn mubayi_odd() {
        let built = mubayi_upper(2, 9).unwrap();
        assert_eq!(built.graph.edge_count(), 21);
        assert_eq!(triangle_count(&built.graph), 6);
        assert_eq!(built.expected_triangles, 6);
        assert!(book_number(&built.graph) <= 3);
    }

    #[test]
    fn mubayi_pre_deletion_deltas() {
        for (b, n) in [(2, 10), (3, 14), (2, 9), (3, 13)] {
            let built = mubayi_upper(b, n).unwrap();
            let base = s_graph(b, n).unwrap();
            let (de, dt) = if n % 2 == 0 { (3, n as u64) } else { (2, (n - 2 * b) as u64) };
            assert_eq!(built.pre_deletion_edges, base.edge_count() as u64 + de);
            assert_eq!(built.pre_deletion_triangles, triangle_count(&base) + dt);
        }
    }

    #[test]
    fn mubayi_rejects_out_of_range() {
        assert!(mubayi_upper(0, 4).is_err());
        assert!(mubayi_upper(2, 8).is_err());
        assert!(mubayi_upper(1, 12).is_err());
    }
}
