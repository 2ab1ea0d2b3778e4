use serde::Serialize;

use crate::canon::{CanonicalForm, SmallGraph};
use crate::error::{Error, Result};
use crate::graph6;

use super::enumerate::{fold_classes, EnumerationFilter};
use super::verify::form_graph;

/// Largest `n_max` run without an override.
pub const SUITE_LIMIT: usize = 8;

/// Census of the classes on `n` vertices with more than `⌊n²/4⌋` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub n: usize,
    pub min_edges: usize,
    pub classes: u64,
    pub min_triangles: Option<u64>,
    pub min_book: Option<usize>,
    /// `t >= ⌊n/2⌋` on every class.
    pub rademacher: bool,
    /// `6 b(G) >= n` on every class.
    pub edwards: bool,
    /// Smallest-form counterexample per failing bound, graph6.
    pub rademacher_witness: Option<String>,
    pub edwards_witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalSuite {
    pub n_max: usize,
    pub rows: Vec<SuiteRow>,
    pub passed: bool,
}

#[derive(Default)]
struct RowTally {
    classes: u64,
    min_t: Option<u64>,
    min_b: Option<usize>,
    rademacher: Option<CanonicalForm>,
    edwards: Option<CanonicalForm>,
}

fn min_opt<T: Ord>(a: Option<T>, b: Option<T>) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

impl RowTally {
    fn visit(&mut self, g: &SmallGraph) {
        let n = g.n();
        let t = g.triangle_count();
        let b = g.book_number();
        self.classes += 1;
        self.min_t = min_opt(self.min_t, Some(t));
        self.min_b = min_opt(self.min_b, Some(b));
        if t < (n / 2) as u64 {
            self.rademacher = min_opt(self.rademacher, Some(g.canonical().form));
        }
        if 6 * b < n {
            self.edwards = min_opt(self.edwards, Some(g.canonical().form));
        }
    }

    fn merge(self, o: RowTally) -> RowTally {
        RowTally {
            classes: self.classes + o.classes,
            min_t: min_opt(self.min_t, o.min_t),
            min_b: min_opt(self.min_b, o.min_b),
            rademacher: min_opt(self.rademacher, o.rademacher),
            edwards: min_opt(self.edwards, o.edwards),
        }
    }
}

fn encode(form: Option<CanonicalForm>) -> Option<String> {
    form.map(|f| graph6::encode(&form_graph(f).to_graph()))
}

/// Checks the classical bounds above the Mantel threshold on every
/// isomorphism class with `1 <= n <= n_max`.
pub fn classical_suite(n_max: usize, allow_large: bool) -> Result<ClassicalSuite> {
    if n_max > SUITE_LIMIT && !allow_large {
        return Err(Error::GuardRail(format!(
            "classical suite limited to n_max <= {SUITE_LIMIT}, got {n_max}; pass the override to run anyway"
        )));
    }
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let filter = EnumerationFilter {
            n,
            min_edges: n * n / 4 + 1,
            max_book: None,
        };
        let (tally, _) = fold_classes(
            &filter,
            allow_large,
            RowTally::default,
            RowTally::visit,
            RowTally::merge,
        )?;
        rows.push(SuiteRow {
            n,
            min_edges: filter.min_edges,
            classes: tally.classes,
            min_triangles: tally.min_t,
            min_book: tally.min_b,
            rademacher: tally.rademacher.is_none(),
            edwards: tally.edwards.is_none(),
            rademacher_witness: encode(tally.rademacher),
            edwards_witness: encode(tally.edwards),
        });
    }
    let passed = rows.iter().all(|r| r.rademacher && r.edwards);
    Ok(ClassicalSuite { n_max, rows, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_hold_to_six() {
        let suite = classical_suite(6, false).unwrap();
        assert!(suite.passed);
        let five = &suite.rows[4];
        assert_eq!((five.min_edges, five.min_triangles), (7, Some(2)));
        let six = &suite.rows[5];
        assert_eq!(six.min_book, Some(2));
    }

    #[test]
    fn guard_rail() {
        assert!(classical_suite(9, false).is_err());
    }
}
