//! Isomorph-free enumeration and the verification runs built on it.

mod certificate;
mod enumerate;
mod stress;
mod suite;
mod verify;

use serde::{Deserialize, Serialize};

pub use certificate::{Certificate, SuiteOutcome, SuiteStatus, CERTIFICATE_SCHEMA};
pub use enumerate::{
    enumerate_classes, enumerate_filtered, estimated_classes, fold_classes, level_lower_bounds,
    EnumerationFilter, EnumerationStats, EXHAUSTIVE_LIMIT,
};
pub use stress::{stress_search, RESTART_LENGTH, STRESS_LIMIT};
pub use suite::{classical_suite, ClassicalSuite, SuiteRow, SUITE_LIMIT};
pub use verify::verify_conjecture;

/// Edge threshold variants: `m >= ⌊n²/4⌋` or `m >= n²/4` (that is,
/// `m >= ⌈n²/4⌉`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdMode {
    #[default]
    FloorQuarter,
    StrictQuarter,
}

impl ThresholdMode {
    pub fn min_edges(self, n: usize) -> usize {
        match self {
            ThresholdMode::FloorQuarter => n * n / 4,
            ThresholdMode::StrictQuarter => (n * n).div_ceil(4),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    #[default]
    Exhaustive,
    Stress,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub n: usize,
    pub b_cap: usize,
    pub edge_threshold_mode: ThresholdMode,
    pub exclude_balanced_bipartite: bool,
    pub mode: SearchMode,
    pub stress_iterations: u64,
    pub seed: u64,
    /// Lifts the exhaustive vertex-count guard rail.
    #[serde(default)]
    pub allow_large: bool,
}

impl SearchParams {
    pub fn exhaustive(n: usize, b_cap: usize) -> Self {
        SearchParams {
            n,
            b_cap,
            edge_threshold_mode: ThresholdMode::FloorQuarter,
            exclude_balanced_bipartite: true,
            mode: SearchMode::Exhaustive,
            stress_iterations: 0,
            seed: 0,
            allow_large: false,
        }
    }

    pub fn stress(n: usize, b_cap: usize, iterations: u64, seed: u64) -> Self {
        SearchParams {
            mode: SearchMode::Stress,
            stress_iterations: iterations,
            seed,
            ..Self::exhaustive(n, b_cap)
        }
    }

    pub fn min_edges(&self) -> usize {
        self.edge_threshold_mode.min_edges(self.n)
    }

    pub fn filter(&self) -> EnumerationFilter {
        EnumerationFilter {
            n: self.n,
            min_edges: self.min_edges(),
            max_book: Some(self.b_cap),
        }
    }

    /// `n/6 <= b < n/4`, with `b` the integer cap.
    pub fn in_conjecture_range(&self) -> bool {
        6 * self.b_cap >= self.n && 4 * self.b_cap < self.n
    }

    /// `b²(n - 4b)`, or 0 when `4b > n`.
    pub fn conjectured_bound(&self) -> u64 {
        crate::constructions::s_graph_triangles(self.b_cap, self.n)
    }
}
