//! Seeded local search for sparse-triangle graphs under a book cap.
//!
//! Each restart starts from a uniformly random graph with exactly the
//! threshold number of edges and repeatedly proposes an edge swap (delete a
//! random edge, add a random non-edge). A proposal is kept when its score
//! `(codegree excess over the cap, triangle-free, triangles)` does not
//! increase. Restarts run in parallel, each on its own ChaCha stream, and are
//! merged by a reduction that does not depend on completion order.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{self, MAX_VERTICES};
use crate::constructions;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

use super::certificate::{Certificate, SuiteOutcome};
use super::{SearchMode, SearchParams};

/// Largest vertex count the dense local search supports.
pub const STRESS_LIMIT: usize = 64;
/// Proposals per restart.
pub const RESTART_LENGTH: u64 = 5000;
/// Distinct minimizers kept in a certificate.
const WITNESS_LIMIT: usize = 32;

#[derive(Clone)]
struct Dense {
    n: usize,
    rows: Vec<u64>,
}

impl Dense {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn toggle(&mut self, u: usize, v: usize) {
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
    }

    /// `(Σ max(0, codeg - cap), t)` over all edges.
    fn score(&self, cap: usize) -> (usize, u64) {
        let mut excess = 0;
        let mut triple = 0u64;
        for u in 0..self.n {
            let mut higher = self.rows[u] & !((2u64 << u).wrapping_sub(1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                let c = (self.rows[u] & self.rows[v]).count_ones() as usize;
                excess += c.saturating_sub(cap);
                triple += c as u64;
            }
        }
        (excess, triple / 3)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges()).expect("edges in range")
    }
}

#[derive(Default)]
struct Best {
    examined: u64,
    min: Option<u64>,
    witnesses: BTreeSet<String>,
}

impl Best {
    fn offer(&mut self, t: u64, witness: impl FnOnce() -> String) {
        match self.min {
            Some(best) if t > best => {}
            Some(best) if t == best => {
                self.witnesses.insert(witness());
                self.truncate();
            }
            _ => {
                self.min = Some(t);
                self.witnesses = BTreeSet::from([witness()]);
            }
        }
    }

    fn truncate(&mut self) {
        while self.witnesses.len() > WITNESS_LIMIT {
            self.witnesses.pop_last();
        }
    }

    fn merge(mut self, o: Best) -> Best {
        self.examined += o.examined;
        match (self.min, o.min) {
            (_, None) => {}
            (None, Some(_)) => {
                self.min = o.min;
                self.witnesses = o.witnesses;
            }
            (Some(a), Some(b)) if b < a => {
                self.min = o.min;
                self.witnesses = o.witnesses;
            }
            (Some(a), Some(b)) if a == b => {
                self.witnesses.extend(o.witnesses);
                self.truncate();
            }
            _ => {}
        }
        self
    }
}

fn witness(g: &Dense) -> String {
    let graph = g.to_graph();
    if g.n <= MAX_VERTICES {
        graph6::encode(&canon::canonical_graph(&graph).expect("n within limit"))
    } else {
        graph6::encode(&graph)
    }
}

fn random_start(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Dense {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Dense { n, rows: vec![0; n] };
    for &(u, v) in &pairs[..m] {
        g.toggle(u, v);
    }
    g
}

fn restart(params: &SearchParams, index: u64, proposals: u64) -> Best {
    let (n, cap, m) = (params.n, params.b_cap, params.min_edges());
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(index);
    let mut g = random_start(n, m, &mut rng);
    let total_pairs = n * (n - 1) / 2;
    let allow_zero = !params.exclude_balanced_bipartite;
    let key = |(excess, t): (usize, u64)| (excess, t == 0 && !allow_zero, t);
    let feasible = |(excess, t): (usize, u64)| excess == 0 && (t > 0 || allow_zero);

    let mut best = Best::default();
    let mut current = g.score(cap);
    if m == 0 || m == total_pairs {
        // No swap exists: the start is the only graph in reach.
        if feasible(current) {
            best.offer(current.1, || witness(&g));
        }
        best.examined = proposals;
        return best;
    }
    for _ in 0..proposals {
        let (du, dv) = loop {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && g.adjacent(u, v) {
                break (u, v);
            }
        };
        let (au, av) = loop {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !g.adjacent(u, v) {
                break (u, v);
            }
        };
        g.toggle(du, dv);
        g.toggle(au, av);
        let proposal = g.score(cap);
        best.examined += 1;
        if key(proposal) <= key(current) {
            current = proposal;
            if feasible(current) {
                best.offer(current.1, || witness(&g));
            }
        } else {
            g.toggle(au, av);
            g.toggle(du, dv);
        }
    }
    best
}

/// Randomized counterexample hunt. Reproducible from `params.seed`
/// regardless of worker count.
pub fn stress_search(params: &SearchParams) -> Result<Certificate> {
    if params.mode != SearchMode::Stress {
        return Err(Error::param("stress_search needs stress mode"));
    }
    let n = params.n;
    if !(2..=STRESS_LIMIT).contains(&n) {
        return Err(Error::param(format!("stress search supports 2 <= n <= {STRESS_LIMIT}, got {n}")));
    }
    let iterations = params.stress_iterations;
    let restarts = iterations.div_ceil(RESTART_LENGTH);
    let best = (0..restarts)
        .into_par_iter()
        .map(|i| {
            let len = RESTART_LENGTH.min(iterations - i * RESTART_LENGTH);
            restart(params, i, len)
        })
        .reduce(Best::default, Best::merge);

    let witnesses: Vec<String> = best.witnesses.into_iter().collect();
    let mut cert = Certificate::assemble(params, best.examined, best.min, witnesses, false);
    let s_graph_note = match constructions::s_graph(params.b_cap, n) {
        Ok(s) => format!(
            "reference S_{{{},{}}} has {} triangles",
            params.b_cap,
            n,
            crate::census::triangle_count(&s)
        ),
        Err(_) => "no reference S-graph for these parameters".to_string(),
    };
    cert.suite_results.insert(
        "stress_beats_bound".to_string(),
        SuiteOutcome::from_counts(
            best.examined,
            cert.extremal_witnesses
                .first()
                .filter(|_| cert.min_triangles_found.is_some_and(|t| t < cert.conjectured_bound))
                .cloned(),
        )
        .with_detail(s_graph_note),
    );
    Ok(cert)
}
