//! Exhaustive small-graph census and theorem verification harness.

pub mod analyze;
pub mod generate;
pub mod wiwj;

pub use analyze::{analyze, AnalysisReport, CSV_HEADER};
pub use generate::{generate_connected_graphs, CensusError, BUILTIN_TIER, CONNECTED_COUNTS};
pub use wiwj::{
    enumerate_instances, odd_wheel_hubs, wiwj_census, wiwj_predicate, Attach, WiWjBounds,
    WiWjInstance, WiWjVerdict,
};
