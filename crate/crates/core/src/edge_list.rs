//! JSON edge-list interchange: `{"n": 5, "edges": [[0, 1], [1, 2]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl EdgeList {
    pub fn from_graph(graph: &Graph) -> Self {
        EdgeList {
            n: graph.n(),
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Builds the graph. Duplicate edges collapse; loops and out-of-range
    /// endpoints are rejected.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
            .map_err(|e| Error::EdgeList(e.to_string()))
    }
}

pub fn parse(text: &str) -> Result<Graph> {
    let list: EdgeList = serde_json::from_str(text).map_err(|e| Error::EdgeList(e.to_string()))?;
    list.to_graph()
}

pub fn to_json(graph: &Graph) -> String {
    serde_json::to_string(&EdgeList::from_graph(graph)).expect("edge list serializes")
}
