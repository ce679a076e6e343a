//! Per-graph analysis: one record aggregating every module predicate, plus
//! deterministic CSV/JSON rendering.

use crate::budget::Budgets;
use crate::cuts::{brick_count, find_nontrivial_tight_cut, find_robust_cut, is_solid};
use crate::graph::MultiGraph;
use crate::iso::canonical_form;
use crate::matching::{has_perfect_matching, is_matching_covered};
use crate::planarity::is_planar;
use crate::removable::{is_near_bipartite, removable_classes, wheel_like_hubs, RemovableClass};
use serde::Serialize;

/// Full per-graph verdict. Flags that were skipped for budget reasons are
/// `None` with the reason recorded in `refusals`; timings are kept out of
/// the serialized form so reports stay byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub canonical: String,
    pub n: usize,
    pub m: usize,
    pub simple: bool,
    pub connected: bool,
    pub bipartite: bool,
    pub has_pm: bool,
    pub matching_covered: bool,
    pub brick: bool,
    pub brace: bool,
    pub planar: bool,
    pub solid: Option<bool>,
    pub near_bipartite: Option<(u32, u32)>,
    /// Only meaningful in brick context; `None` for non-bricks.
    pub wheel_like: Option<bool>,
    pub hubs: Vec<usize>,
    pub removable_edges: Vec<u32>,
    pub removable_doubletons: Vec<(u32, u32)>,
    pub parallel_classes: Vec<(usize, usize, usize)>,
    pub b: Option<usize>,
    pub robust_cut_shore: Option<Vec<usize>>,
    pub refusals: Vec<String>,
    #[serde(skip)]
    pub elapsed: std::time::Duration,
}

/// Runs every predicate against one graph, honoring the budgets.
pub fn analyze(g: &MultiGraph, budgets: &Budgets) -> AnalysisReport {
    let start = std::time::Instant::now();
    let mut refusals = Vec::new();
    let canonical = canonical_form(g).hex();
    let connected = g.is_connected();
    let bipartite = g.is_bipartite();
    let has_pm = has_perfect_matching(g);
    let matching_covered = is_matching_covered(g);
    let planar = is_planar(g);
    let parallel_classes: Vec<(usize, usize, usize)> = g
        .parallel_classes()
        .into_iter()
        .map(|(u, v, ids)| (u, v, ids.len()))
        .collect();

    let (brick, brace, b) = if matching_covered {
        let no_tight = find_nontrivial_tight_cut(g).is_none();
        let b = brick_count(g).ok();
        (no_tight && !bipartite, no_tight && bipartite, b)
    } else {
        (false, false, None)
    };

    let mut removable_edges = Vec::new();
    let mut removable_doubletons = Vec::new();
    let mut near_bipartite = None;
    let mut wheel_like = None;
    let mut hubs = Vec::new();
    if matching_covered {
        for class in removable_classes(g) {
            match class {
                RemovableClass::Edge(e) => removable_edges.push(e.0),
                RemovableClass::Doubleton(e, f) => removable_doubletons.push((e.0, f.0)),
            }
        }
        near_bipartite = is_near_bipartite(g).map(|(e, f)| (e.0, f.0));
        if brick {
            let h = wheel_like_hubs(g);
            wheel_like = Some(!h.is_empty());
            hubs = h.to_vec();
        }
    }

    let mut solid = None;
    let mut robust_cut_shore = None;
    if brick {
        match is_solid(g, budgets) {
            Ok(v) => solid = Some(v),
            Err(r) => refusals.push(format!("solid: {r}")),
        }
        if solid == Some(false) {
            match find_robust_cut(g, budgets) {
                Ok(found) => robust_cut_shore = found.map(|r| r.shore.to_vec()),
                Err(r) => refusals.push(format!("robust_cut: {r}")),
            }
        }
    }

    AnalysisReport {
        canonical,
        n: g.n(),
        m: g.m(),
        simple: g.is_simple(),
        connected,
        bipartite,
        has_pm,
        matching_covered,
        brick,
        brace,
        planar,
        solid,
        near_bipartite,
        wheel_like,
        hubs,
        removable_edges,
        removable_doubletons,
        parallel_classes,
        b,
        robust_cut_shore,
        refusals,
        elapsed: start.elapsed(),
    }
}

pub const CSV_HEADER: &str = "canonical,n,m,simple,connected,bipartite,has_pm,matching_covered,brick,brace,planar,solid,near_bipartite,wheel_like,hubs,removable_edges,removable_doubletons,parallel_classes,b,robust_cut_shore,refusals";

fn opt_bool(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "-",
    }
}

impl AnalysisReport {
    /// One deterministic CSV row (no quoting needed: list cells use `;`
    /// separators).
    pub fn csv_row(&self) -> String {
        let hubs = join(self.hubs.iter());
        let redges = join(self.removable_edges.iter());
        let rdbl = join(self.removable_doubletons.iter().map(|(e, f)| format!("{e}+{f}")));
        let pcls = join(self.parallel_classes.iter().map(|(u, v, k)| format!("{u}-{v}x{k}")));
        let robust = match &self.robust_cut_shore {
            Some(sh) => join(sh.iter()),
            None => "-".to_string(),
        };
        let nb = match self.near_bipartite {
            Some((e, f)) => format!("{e}+{f}"),
            None => "-".to_string(),
        };
        let b = self.b.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        let refusals = join(self.refusals.iter().map(|r| r.replace(',', ";")));
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.canonical,
            self.n,
            self.m,
            self.simple,
            self.connected,
            self.bipartite,
            self.has_pm,
            self.matching_covered,
            self.brick,
            self.brace,
            self.planar,
            opt_bool(self.solid),
            nb,
            opt_bool(self.wheel_like),
            hubs,
            redges,
            rdbl,
            pcls,
            b,
            robust,
            refusals,
        )
    }
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    let parts: Vec<String> = items.map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(";")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, odd_wheel, NamedGraph};

    #[test]
    fn w5_report() {
        let r = analyze(&named_graph(NamedGraph::W5), &Budgets::default());
        assert!(r.brick && r.planar && !r.bipartite);
        assert_eq!(r.solid, Some(true));
        assert_eq!(r.wheel_like, Some(true));
        assert_eq!(r.hubs, vec![5]);
        assert_eq!(r.b, Some(1));
        assert_eq!(r.removable_edges.len(), 5);
        assert!(r.removable_doubletons.is_empty());
    }

    #[test]
    fn c6bar_report() {
        let r = analyze(&named_graph(NamedGraph::C6Bar), &Budgets::default());
        assert!(r.brick && r.planar);
        assert_eq!(r.solid, Some(false));
        assert_eq!(r.wheel_like, Some(false));
        assert!(r.hubs.is_empty());
        assert!(r.robust_cut_shore.is_some());
        assert!(r.near_bipartite.is_some());
    }

    #[test]
    fn r8_report() {
        let r = analyze(&named_graph(NamedGraph::R8), &Budgets::default());
        assert!(r.brick);
        assert_eq!(r.wheel_like, Some(false));
        assert_eq!(r.removable_doubletons.len(), 2);
        assert_eq!(r.removable_edges.len(), 1);
    }

    #[test]
    fn csv_row_shape() {
        let r = analyze(&odd_wheel(3, Some(&[2, 1, 1])).unwrap(), &Budgets::default());
        let row = r.csv_row();
        assert_eq!(row.split(',').count(), CSV_HEADER.split(',').count());
        assert!(!r.parallel_classes.is_empty());
    }

    #[test]
    fn refusals_are_recorded() {
        let tight = Budgets { solidity_vertex_cap: 4, ..Budgets::default() };
        let r = analyze(&named_graph(NamedGraph::W5), &tight);
        assert_eq!(r.solid, None);
        assert!(!r.refusals.is_empty());
    }
}
