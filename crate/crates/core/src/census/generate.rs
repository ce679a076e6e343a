//! Exhaustive generation of small graphs, one representative per
//! isomorphism class, by vertex extension with canonical-form rejection.

use crate::graph::MultiGraph;
use crate::iso::{canonical_form, CanonicalForm};
use once_cell::sync::Lazy;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest order generated in-process. Larger censuses stream graph6 from
/// an external generator instead.
pub const BUILTIN_TIER: usize = 8;

/// Connected simple graph counts per order, used as generation fixtures.
pub const CONNECTED_COUNTS: [usize; BUILTIN_TIER + 1] = [0, 1, 1, 2, 6, 21, 112, 853, 11117];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("built-in generation is capped at n = {BUILTIN_TIER}; stream graph6 input from an external generator for n = {0}")]
    TierExceeded(usize),
}

/// Rebuilds a simple graph from its canonical form; the edge order (row
/// major over the upper triangle) makes the representative independent of
/// how it was discovered.
fn graph_from_canonical(form: &CanonicalForm) -> MultiGraph {
    let n = form.0[0] as usize;
    let mut edges = Vec::new();
    let mut idx = 1;
    for i in 0..n {
        for j in (i + 1)..n {
            for _ in 0..form.0[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    MultiGraph::new(n, &edges).expect("canonical form encodes a valid graph")
}

/// All simple graphs on exactly `n` vertices (connected or not), one per
/// isomorphism class, sorted by canonical form.
fn all_graphs_exactly(n: usize) -> Vec<CanonicalForm> {
    if n == 1 {
        return vec![canonical_form(&MultiGraph::new(1, &[]).unwrap())];
    }
    let prev = all_graphs_exactly(n - 1);
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    for form in prev {
        let base = graph_from_canonical(&form);
        let old_edges: Vec<(usize, usize)> = base.edges().map(|(_, u, v)| (u, v)).collect();
        // Attach a new vertex with every possible neighborhood.
        for mask in 0u64..(1u64 << (n - 1)) {
            let mut edges = old_edges.clone();
            for b in 0..(n - 1) {
                if mask >> b & 1 == 1 {
                    edges.push((b, n - 1));
                }
            }
            let g = MultiGraph::new(n, &edges).expect("valid extension");
            seen.insert(canonical_form(&g));
        }
    }
    seen.into_iter().collect()
}

static LEVELS: Lazy<Vec<Vec<MultiGraph>>> = Lazy::new(|| {
    let mut levels = vec![Vec::new()];
    for n in 1..=BUILTIN_TIER {
        let graphs: Vec<MultiGraph> = all_graphs_exactly(n)
            .iter()
            .map(graph_from_canonical)
            .filter(|g| g.is_connected())
            .collect();
        levels.push(graphs);
    }
    levels
});

/// One representative per isomorphism class of connected simple graphs on
/// `n` vertices, in canonical-form order. Results are cached per process.
pub fn generate_connected_graphs(n: usize) -> Result<&'static [MultiGraph], CensusError> {
    if n == 0 || n > BUILTIN_TIER {
        return Err(CensusError::TierExceeded(n));
    }
    Ok(&LEVELS[n])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts_match_the_published_sequence() {
        for n in 1..=6 {
            assert_eq!(
                generate_connected_graphs(n).unwrap().len(),
                CONNECTED_COUNTS[n],
                "n = {n}"
            );
        }
    }

    #[test]
    fn tier_bound_is_enforced() {
        assert_eq!(generate_connected_graphs(9), Err(CensusError::TierExceeded(9)));
    }

    #[test]
    fn representatives_are_connected_and_simple() {
        for g in generate_connected_graphs(5).unwrap() {
            assert!(g.is_connected());
            assert!(g.is_simple());
            assert_eq!(g.n(), 5);
        }
    }
}
