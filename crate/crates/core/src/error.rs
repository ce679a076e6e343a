use thiserror::Error;

/// Errors raised by graph constructions and structural operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("edge id {0} does not exist")]
    UnknownEdge(u32),
    #[error("graph too large for this build (n = {n} > 64 or m = {m} > 128)")]
    TooLarge { n: usize, m: usize },
    #[error("shore must be a nonempty proper subset of the vertices")]
    BadShore,
    #[error("splice degree mismatch: d_G(u) = {du}, d_H(v) = {dv}")]
    SpliceDegreeMismatch { du: usize, dv: usize },
    #[error("splice map is not a bijection between the two edge stars")]
    SpliceMapNotBijective,
    #[error("wheel rim length must be odd and at least 3, got {0}")]
    BadWheelSize(usize),
    #[error("spoke multiplicities must all be at least 1")]
    BadMultiplicity,
    #[error("graph is not matching covered")]
    NotMatchingCovered,
}

/// Parse errors for the graph6 / sparse6 / edge-list codecs. Each variant
/// names the byte or line where decoding failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("byte {value:#04x} at offset {offset} outside printable graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, value: u8 },
    #[error("input truncated: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("{got} trailing bytes after offset {offset}")]
    TrailingData { offset: usize, got: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph order {0} exceeds the supported graph6 tier (n <= 62)")]
    UnsupportedOrder(usize),
    #[error("sparse6 input must start with ':'")]
    MissingSparse6Header,
    #[error("sparse6 loop at vertex {vertex} near offset {offset}: loops are not supported")]
    Sparse6Loop { vertex: usize, offset: usize },
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph6 cannot encode a multigraph (parallel edges between {u} and {v}); use the edge-list format")]
    MultigraphUnsupported { u: usize, v: usize },
}

/// A computation declined to run to completion because a configured budget
/// was exceeded. Refusals are reported, never silently swallowed: a suite
/// that skipped work exits with the dedicated "incomplete" status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Refusal {
    #[error("perfect matching enumeration exceeded the cap of {cap}")]
    PmCapExceeded { cap: usize },
    #[error("solidity check refused: n = {n} exceeds the configured bound {bound}")]
    SolidityBound { n: usize, bound: usize },
    #[error("witness search budget of {budget} steps exhausted")]
    WitnessBudget { budget: u64 },
}
