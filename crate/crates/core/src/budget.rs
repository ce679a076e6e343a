//! Budget knobs for the exhaustive searches. Every budget violation is
//! surfaced as an explicit [`Refusal`](crate::error::Refusal); suites that
//! skipped work because of one report it instead of passing silently.

/// Resource bounds threaded through the expensive predicates.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    /// Hard cap on the number of perfect matchings enumerated per graph.
    pub pm_cap: usize,
    /// Largest vertex count for which solidity is decided exhaustively.
    pub solidity_vertex_cap: usize,
    /// Step budget for the Kuratowski witness search.
    pub witness_steps: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            pm_cap: 500_000,
            solidity_vertex_cap: 12,
            witness_steps: 20_000_000,
        }
    }
}
