//! Matching covered graphs at desk scale: perfect matching machinery,
//! bricks and braces, tight/separating/robust cuts, removable classes,
//! wheel-like detection, planarity, and exhaustive census harnesses that
//! check the structure theorems on every small graph.

pub mod budget;
pub mod census;
pub mod cuts;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod matching;
pub mod planarity;
pub mod removable;

pub use budget::Budgets;
pub use error::{GraphError, ParseError, Refusal};
pub use graph::{
    named_graph, odd_wheel, EdgeId, EdgeSet, MultiGraph, NamedGraph, Splice, SpliceMap, Vertex,
    VertexSet,
};
