use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon;
use crate::census;
use crate::constructions;
use crate::graph6;

use super::SearchParams;

pub const CERTIFICATE_SCHEMA: &str = "bookgraph.certificate/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub status: SuiteStatus,
    /// Graphs the property was evaluated on.
    pub checked: u64,
    /// First failing graph (graph6), if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SuiteOutcome {
    pub fn from_counts(checked: u64, witness: Option<String>) -> Self {
        SuiteOutcome {
            status: if witness.is_some() {
                SuiteStatus::Fail
            } else {
                SuiteStatus::Pass
            },
            checked,
            witness,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != SuiteStatus::Fail
    }
}

/// Record of one verification run, sufficient to re-check every claim it
/// makes about its witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub params: SearchParams,
    /// Graphs that entered the minimum: isomorphism classes (exhaustive) or
    /// evaluated swap proposals (stress).
    pub graphs_examined: u64,
    pub min_triangles_found: Option<u64>,
    /// `b²(n - 4b)`.
    pub conjectured_bound: u64,
    pub in_conjecture_range: bool,
    /// Minimizers in graph6, canonically labelled where `n <= 16`, sorted.
    pub extremal_witnesses: Vec<String>,
    pub matches_conjecture: bool,
    pub unique_extremal_is_s_graph: bool,
    /// In range and either below the bound, or at it with some other
    /// minimizer than `S_{b,n}`.
    pub violation: bool,
    pub suite_results: BTreeMap<String, SuiteOutcome>,
}

impl Certificate {
    pub(crate) fn assemble(
        params: &SearchParams,
        graphs_examined: u64,
        min_triangles_found: Option<u64>,
        extremal_witnesses: Vec<String>,
        exhaustive: bool,
    ) -> Self {
        let conjectured_bound = params.conjectured_bound();
        let in_conjecture_range = params.in_conjecture_range();
        let unique_extremal_is_s_graph = extremal_witnesses.len() == 1
            && is_s_graph(&extremal_witnesses[0], params.b_cap, params.n);
        let matches_conjecture = min_triangles_found == Some(conjectured_bound);
        let violation = in_conjecture_range
            && min_triangles_found.is_some_and(|t| {
                t < conjectured_bound || (exhaustive && t == conjectured_bound && !unique_extremal_is_s_graph)
            });
        Certificate {
            schema: CERTIFICATE_SCHEMA.to_string(),
            params: params.clone(),
            graphs_examined,
            min_triangles_found,
            conjectured_bound,
            in_conjecture_range,
            extremal_witnesses,
            matches_conjecture,
            unique_extremal_is_s_graph,
            violation,
            suite_results: BTreeMap::new(),
        }
    }

    /// Re-derives the witness statistics from the graph6 strings alone.
    /// Returns a description of the first inconsistency found.
    pub fn recheck(&self) -> Result<(), String> {
        if self.schema != CERTIFICATE_SCHEMA {
            return Err(format!("unknown schema {}", self.schema));
        }
        let p = &self.params;
        if self.conjectured_bound != p.conjectured_bound() {
            return Err("conjectured bound does not match parameters".into());
        }
        if self.min_triangles_found.is_none() != self.extremal_witnesses.is_empty() {
            return Err("minimum and witness list disagree on emptiness".into());
        }
        for w in &self.extremal_witnesses {
            let g = graph6::decode_str(w).map_err(|e| format!("{w}: {e}"))?;
            if g.n() != p.n {
                return Err(format!("{w}: has {} vertices, expected {}", g.n(), p.n));
            }
            if g.edge_count() < p.min_edges() {
                return Err(format!("{w}: {} edges below threshold {}", g.edge_count(), p.min_edges()));
            }
            let profile = census::book_profile(&g);
            if profile.book_number > p.b_cap {
                return Err(format!("{w}: book number {} above cap {}", profile.book_number, p.b_cap));
            }
            if p.exclude_balanced_bipartite
                && canon::is_isomorphic(&g, &constructions::balanced_bipartite(p.n)).unwrap_or(false)
            {
                return Err(format!("{w}: is the excluded balanced complete bipartite graph"));
            }
            if Some(profile.triangle_count) != self.min_triangles_found {
                return Err(format!(
                    "{w}: has {} triangles, certificate records {:?}",
                    profile.triangle_count, self.min_triangles_found
                ));
            }
        }
        let unique = self.extremal_witnesses.len() == 1
            && is_s_graph(&self.extremal_witnesses[0], p.b_cap, p.n);
        if unique != self.unique_extremal_is_s_graph {
            return Err("uniqueness flag does not match witnesses".into());
        }
        if self.matches_conjecture != (self.min_triangles_found == Some(self.conjectured_bound)) {
            return Err("matches_conjecture inconsistent with minimum".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn is_s_graph(witness: &str, b: usize, n: usize) -> bool {
    let Ok(g) = graph6::decode_str(witness) else {
        return false;
    };
    let Ok(s) = constructions::s_graph(b, n) else {
        return false;
    };
    if n <= canon::MAX_VERTICES {
        canon::is_isomorphic(&g, &s).unwrap_or(false)
    } else {
        g == s
    }
}
