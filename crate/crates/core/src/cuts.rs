//! Edge cut classification (trivial / tight / separating / robust), the
//! tight cut decomposition into bricks and braces, solidity, and the
//! robust-cut refinement search.

use crate::budget::Budgets;
use crate::error::{GraphError, Refusal};
use crate::graph::{EdgeSet, MultiGraph, Vertex, VertexSet};
use crate::matching::{all_perfect_matchings, enumerate_perfect_matchings, is_matching_covered, Matching};

/// Classification of one edge cut with its witnesses.
#[derive(Clone, Debug)]
pub struct CutReport {
    pub shore: VertexSet,
    pub cut: EdgeSet,
    pub trivial: bool,
    pub separating: bool,
    pub tight: bool,
    pub robust: bool,
    /// A perfect matching meeting the cut in a number of edges other than
    /// one; present exactly when the cut is not tight (and the graph has a
    /// perfect matching).
    pub non_tight_witness: Option<Matching>,
    /// Matching-coveredness of `G/X̄` and `G/X` (shore side first).
    pub contractions_mc: (bool, bool),
    /// Whether both contractions are near-bricks; only computed for
    /// separating non-tight cuts.
    pub contractions_near_bricks: Option<(bool, bool)>,
}

/// Classifies the cut `∂(x)` of a matching covered graph.
pub fn classify_cut(g: &MultiGraph, x: VertexSet, budgets: &Budgets) -> Result<CutReport, Refusal> {
    let n = g.n();
    let cut = g.edge_cut(x).expect("valid shore");
    let trivial = x.len() == 1 || x.len() == n - 1;
    let pms = enumerate_perfect_matchings(g, budgets.pm_cap)?;
    let mut tight = !pms.is_empty();
    let mut witness = None;
    for pm in &pms {
        let met = pm.0.intersection(cut).len();
        if met != 1 {
            tight = false;
            witness = Some(*pm);
            break;
        }
    }
    let shore_side = contract_to(g, x.complement(n));
    let other_side = contract_to(g, x);
    let mc = (is_matching_covered(&shore_side), is_matching_covered(&other_side));
    let separating = mc.0 && mc.1;
    let mut near_bricks = None;
    let mut robust = false;
    if separating && !tight {
        let nb = (is_near_brick(&shore_side), is_near_brick(&other_side));
        robust = nb.0 && nb.1;
        near_bricks = Some(nb);
    }
    Ok(CutReport {
        shore: x,
        cut,
        trivial,
        separating,
        tight,
        robust,
        non_tight_witness: witness,
        contractions_mc: mc,
        contractions_near_bricks: near_bricks,
    })
}

/// Contracts `shore` and returns just the graph.
pub fn contract_to(g: &MultiGraph, shore: VertexSet) -> MultiGraph {
    g.contract(shore).expect("valid shore").0
}

fn is_tight(cut: EdgeSet, pms: &[Matching]) -> bool {
    !pms.is_empty() && pms.iter().all(|pm| pm.0.intersection(cut).len() == 1)
}

/// Odd nontrivial shores containing vertex 0 (one representative per cut),
/// sizes ascending, masks ascending within a size.
fn odd_shores(n: usize) -> Vec<VertexSet> {
    let mut shores = Vec::new();
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 1];
    // Enumerate masks over vertices 1..n and prepend vertex 0.
    let rest = n - 1;
    for mask in 0u64..(1u64 << rest) {
        let size = 1 + mask.count_ones() as usize;
        if size % 2 == 1 && size >= 3 && size <= n - 3 {
            by_size[size].push(VertexSet((mask << 1) | 1));
        }
    }
    for group in by_size {
        shores.extend(group);
    }
    shores
}

/// Deterministic shore-choice policies for the decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShorePolicy {
    /// First tight shore in (size ascending, mask ascending) order.
    LexSmallest,
    /// First tight shore in (size descending, mask descending) order.
    LexLargest,
}

fn find_tight_with_policy(g: &MultiGraph, policy: ShorePolicy) -> Option<VertexSet> {
    let n = g.n();
    if n < 6 || n % 2 == 1 {
        return None;
    }
    let pms = all_perfect_matchings(g);
    let mut shores = odd_shores(n);
    if policy == ShorePolicy::LexLargest {
        shores.reverse();
    }
    shores
        .into_iter()
        .find(|&x| is_tight(g.edge_cut(x).expect("valid shore"), &pms))
}

/// Exhaustive search for a nontrivial tight cut; returns its shore
/// containing vertex 0, in the deterministic smallest-first order.
pub fn find_nontrivial_tight_cut(g: &MultiGraph) -> Option<VertexSet> {
    find_tight_with_policy(g, ShorePolicy::LexSmallest)
}

/// Nonbipartite matching covered graph with no nontrivial tight cut.
pub fn is_brick(g: &MultiGraph) -> bool {
    is_matching_covered(g) && !g.is_bipartite() && find_nontrivial_tight_cut(g).is_none()
}

/// Bipartite matching covered graph with no nontrivial tight cut.
pub fn is_brace(g: &MultiGraph) -> bool {
    is_matching_covered(g) && g.is_bipartite() && find_nontrivial_tight_cut(g).is_none()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LeafKind {
    Brick,
    Brace,
}

/// One splitting step of the decomposition: the graph had `n` vertices and
/// was split along the recorded shore.
#[derive(Clone, Debug)]
pub struct DecompStep {
    pub n: usize,
    pub shore: VertexSet,
}

/// Result of the tight cut decomposition.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub leaves: Vec<(MultiGraph, LeafKind)>,
    pub steps: Vec<DecompStep>,
}

impl Decomposition {
    pub fn brick_count(&self) -> usize {
        self.leaves.iter().filter(|(_, k)| *k == LeafKind::Brick).count()
    }
}

/// Recursively splits on nontrivial tight cuts until every piece is a brick
/// or a brace. The shore policy fixes which cut is chosen at each step; the
/// number of bricks must come out the same either way.
pub fn tight_cut_decomposition(g: &MultiGraph, policy: ShorePolicy) -> Result<Decomposition, GraphError> {
    if !is_matching_covered(g) {
        return Err(GraphError::NotMatchingCovered);
    }
    let mut leaves = Vec::new();
    let mut steps = Vec::new();
    let mut stack = vec![g.clone()];
    while let Some(cur) = stack.pop() {
        match find_tight_with_policy(&cur, policy) {
            Some(shore) => {
                steps.push(DecompStep { n: cur.n(), shore });
                let inner = contract_to(&cur, shore.complement(cur.n()));
                let outer = contract_to(&cur, shore);
                stack.push(outer);
                stack.push(inner);
            }
            None => {
                let kind = if cur.is_bipartite() { LeafKind::Brace } else { LeafKind::Brick };
                leaves.push((cur, kind));
            }
        }
    }
    Ok(Decomposition { leaves, steps })
}

/// The number of bricks in the tight cut decomposition.
pub fn brick_count(g: &MultiGraph) -> Result<usize, GraphError> {
    Ok(tight_cut_decomposition(g, ShorePolicy::LexSmallest)?.brick_count())
}

/// Matching covered with exactly one brick in its decomposition.
pub fn is_near_brick(g: &MultiGraph) -> bool {
    is_matching_covered(g) && brick_count(g).map(|b| b == 1).unwrap_or(false)
}

/// Every separating cut is tight. Refuses above the configured vertex cap.
pub fn is_solid(g: &MultiGraph, budgets: &Budgets) -> Result<bool, Refusal> {
    let n = g.n();
    if n > budgets.solidity_vertex_cap {
        return Err(Refusal::SolidityBound { n, bound: budgets.solidity_vertex_cap });
    }
    let pms = enumerate_perfect_matchings(g, budgets.pm_cap)?;
    for x in odd_shores(n) {
        let cut = g.edge_cut(x).expect("valid shore");
        if is_tight(cut, &pms) {
            continue;
        }
        let inner = contract_to(g, x.complement(n));
        if !is_matching_covered(&inner) {
            continue;
        }
        let outer = contract_to(g, x);
        if is_matching_covered(&outer) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First robust cut in shore order, if any: separating, not tight, both
/// contractions near-bricks.
pub fn find_robust_cut(g: &MultiGraph, budgets: &Budgets) -> Result<Option<CutReport>, Refusal> {
    let n = g.n();
    let pms = enumerate_perfect_matchings(g, budgets.pm_cap)?;
    for x in odd_shores(n) {
        let cut = g.edge_cut(x).expect("valid shore");
        if is_tight(cut, &pms) {
            continue;
        }
        let inner = contract_to(g, x.complement(n));
        if !is_matching_covered(&inner) {
            continue;
        }
        let outer = contract_to(g, x);
        if !is_matching_covered(&outer) {
            continue;
        }
        if is_near_brick(&inner) && is_near_brick(&outer) {
            return Ok(Some(classify_cut(g, x, budgets)?));
        }
    }
    Ok(None)
}

/// Output of the robust-cut refinement: shores `x_inner ⊆ x ⊆ x_outer` such
/// that the two one-sided contractions are bricks and contracting both
/// extremes yields a bipartite matching covered graph whose two contracted
/// vertices lie in different color classes.
#[derive(Clone, Debug)]
pub struct Refinement {
    pub x_inner: VertexSet,
    pub x_outer: VertexSet,
    pub h: MultiGraph,
    /// Vertex of `h` that `x_inner` became.
    pub inner_vertex: Vertex,
    /// Vertex of `h` that the complement of `x_outer` became.
    pub outer_vertex: Vertex,
    /// Old vertex of `g` -> vertex of `h`.
    pub vmap: Vec<Vertex>,
}

/// Builds `H = G/(a -> last)/(b -> last)` for disjoint shores `a`, `b`,
/// returning the graph, the images of the two contracted shores, and the
/// composed vertex map.
pub fn double_contract(
    g: &MultiGraph,
    a: VertexSet,
    b: VertexSet,
) -> (MultiGraph, Vertex, Vertex, Vec<Vertex>) {
    debug_assert!(a.intersection(b).is_empty());
    let (g1, map1) = g.contract(a).expect("valid shore");
    let a_vertex = g1.n() - 1;
    let b_image = VertexSet::from_iter(b.iter().map(|v| map1[v]));
    let (h, map2) = g1.contract(b_image).expect("valid shore");
    let vmap: Vec<Vertex> = (0..g.n()).map(|v| map2[map1[v]]).collect();
    let b_vertex = h.n() - 1;
    (h, map2[a_vertex], b_vertex, vmap)
}

/// Searches for the refinement of a robust cut: `x_inner` over subsets of
/// `x` in decreasing mask order (so `x` itself comes first), `x_outer` over
/// supersets of `x` in increasing order of added vertices. Returns the first
/// witness; absence on a genuinely robust cut falsifies the refinement
/// theorem and is treated as such by the census suites.
pub fn robust_refinement(g: &MultiGraph, x: VertexSet) -> Option<Refinement> {
    let n = g.n();
    let full = VertexSet::full(n).0;
    let outside = full & !x.0;
    // Subsets of x, decreasing: sub = (sub - 1) & x.0 walks all submasks.
    let mut sub = x.0;
    loop {
        let x_inner = VertexSet(sub);
        if !x_inner.is_empty() && x_inner.len() % 2 == 1 {
            let inner_side = contract_to(g, x_inner.complement(n));
            if is_brick(&inner_side) {
                // Supersets of x: add submasks of the outside, increasing.
                let mut add = 0u64;
                loop {
                    let x_outer = VertexSet(x.0 | add);
                    if x_outer.0 != full && x_outer.len() % 2 == 1 {
                        let outer_side = contract_to(g, x_outer);
                        if is_brick(&outer_side) {
                            let b = x_outer.complement(n);
                            let (h, inner_vertex, outer_vertex, vmap) =
                                double_contract(g, x_inner, b);
                            if is_matching_covered(&h) {
                                if let Ok((ca, cb)) = h.bipartition() {
                                    let split = (ca.contains(inner_vertex)
                                        && cb.contains(outer_vertex))
                                        || (cb.contains(inner_vertex)
                                            && ca.contains(outer_vertex));
                                    if split {
                                        return Some(Refinement {
                                            x_inner,
                                            x_outer,
                                            h,
                                            inner_vertex,
                                            outer_vertex,
                                            vmap,
                                        });
                                    }
                                }
                            }
                        }
                    }
                    if add == outside {
                        break;
                    }
                    add = (add.wrapping_sub(outside)) & outside;
                }
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & x.0;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraph};
    use crate::iso::is_isomorphic;

    fn cycle(n: usize) -> MultiGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::new(n, &edges).unwrap()
    }

    fn k33() -> MultiGraph {
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        MultiGraph::new(6, &edges).unwrap()
    }

    #[test]
    fn trivial_cuts_are_tight_in_w5() {
        let w5 = named_graph(NamedGraph::W5);
        let report = classify_cut(&w5, VertexSet::singleton(0), &Budgets::default()).unwrap();
        assert!(report.trivial);
        assert!(report.tight);
        assert!(report.separating);
        assert!(!report.robust);
    }

    #[test]
    fn prism_triangle_cut_is_separating_not_tight() {
        let c6bar = named_graph(NamedGraph::C6Bar);
        let shore = VertexSet::from_iter([0, 2, 4]);
        let report = classify_cut(&c6bar, shore, &Budgets::default()).unwrap();
        assert!(!report.trivial);
        assert!(report.separating);
        assert!(!report.tight);
        assert!(report.robust);
        let witness = report.non_tight_witness.expect("a matching with 3 cut edges");
        assert_eq!(witness.0.intersection(report.cut).len(), 3);
        // Both contractions of the triangle cut are K4 up to multiplicity.
        let inner = contract_to(&c6bar, shore.complement(6));
        assert!(is_isomorphic(&inner.underlying_simple(), &named_graph(NamedGraph::K4)));
    }

    #[test]
    fn adjacent_pair_shore_of_c6_is_not_separating() {
        let c6 = cycle(6);
        let report = classify_cut(&c6, VertexSet::from_iter([0, 1]), &Budgets::default()).unwrap();
        assert!(!report.separating);
    }

    #[test]
    fn brick_and_brace_fixtures() {
        for name in [
            NamedGraph::K4,
            NamedGraph::W5,
            NamedGraph::W7,
            NamedGraph::C6Bar,
            NamedGraph::R8,
        ] {
            assert!(is_brick(&named_graph(name)), "{name:?} should be a brick");
        }
        assert!(!is_brick(&cycle(6)));
        assert!(is_brace(&k33()));
        assert!(!is_brace(&cycle(6)));
    }

    #[test]
    fn c6_decomposes_into_braces() {
        let c6 = cycle(6);
        let d = tight_cut_decomposition(&c6, ShorePolicy::LexSmallest).unwrap();
        assert_eq!(d.brick_count(), 0);
        assert!(d.leaves.iter().all(|(_, k)| *k == LeafKind::Brace));
        assert_eq!(brick_count(&c6).unwrap(), 0);
    }

    #[test]
    fn bricks_are_near_bricks() {
        assert_eq!(brick_count(&named_graph(NamedGraph::W5)).unwrap(), 1);
        assert!(is_near_brick(&named_graph(NamedGraph::C6Bar)));
    }

    /// Two triangles, each fully joined to two middle vertices: the middle
    /// pair is a nontrivial barrier, and the decomposition yields two
    /// K4-like bricks plus a brace.
    fn double_k4_gadget() -> MultiGraph {
        let mut edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        for t in [0, 1, 2] {
            edges.push((t, 6));
            edges.push((t, 7));
        }
        for t in [3, 4, 5] {
            edges.push((t, 6));
            edges.push((t, 7));
        }
        MultiGraph::new(8, &edges).unwrap()
    }

    #[test]
    fn barrier_gadget_has_two_bricks() {
        let g = double_k4_gadget();
        assert!(is_matching_covered(&g));
        assert_eq!(brick_count(&g).unwrap(), 2);
        let d = tight_cut_decomposition(&g, ShorePolicy::LexLargest).unwrap();
        assert_eq!(d.brick_count(), 2);
    }

    #[test]
    fn solidity_fixtures() {
        let budgets = Budgets::default();
        assert_eq!(is_solid(&named_graph(NamedGraph::K4), &budgets), Ok(true));
        assert_eq!(is_solid(&named_graph(NamedGraph::W5), &budgets), Ok(true));
        assert_eq!(is_solid(&named_graph(NamedGraph::W7), &budgets), Ok(true));
        assert_eq!(is_solid(&named_graph(NamedGraph::C6Bar), &budgets), Ok(false));
        let tight = Budgets { solidity_vertex_cap: 4, ..Budgets::default() };
        assert_eq!(
            is_solid(&named_graph(NamedGraph::W5), &tight),
            Err(Refusal::SolidityBound { n: 6, bound: 4 })
        );
    }

    #[test]
    fn robust_cut_fixtures() {
        let budgets = Budgets::default();
        let report = find_robust_cut(&named_graph(NamedGraph::C6Bar), &budgets)
            .unwrap()
            .expect("prism has a robust cut");
        assert!(report.robust);
        assert_eq!(report.shore.len(), 3);
        assert!(find_robust_cut(&named_graph(NamedGraph::W5), &budgets).unwrap().is_none());
    }

    #[test]
    fn prism_refinement_is_degenerate() {
        let c6bar = named_graph(NamedGraph::C6Bar);
        let report = find_robust_cut(&c6bar, &Budgets::default()).unwrap().unwrap();
        let refinement = robust_refinement(&c6bar, report.shore).expect("refinement");
        assert_eq!(refinement.x_inner, report.shore);
        assert_eq!(refinement.x_outer, report.shore);
        assert_eq!(refinement.h.n(), 2);
        assert_eq!(refinement.h.m(), 3);
        assert!(is_matching_covered(&refinement.h));
    }
}
