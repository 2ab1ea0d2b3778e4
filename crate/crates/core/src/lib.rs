//! Triangles, books and 3-prism blow-ups.
//!
//! Exact triangle/book censuses, the prism blow-up constructions `S_{b,n}`,
//! neighbourhood cuts and induced-bipartite extraction, the tripartition
//! surgery functionals, and an isomorph-free enumerator that checks the
//! triangle/book trade-off exhaustively on small vertex counts and emits
//! re-checkable certificates.

pub mod bipartite;
pub mod bitset;
pub mod canon;
pub mod cli;
pub mod census;
pub mod constructions;
pub mod edge_list;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod rational;
pub mod search;
pub mod surgery;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
