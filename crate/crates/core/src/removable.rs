//! Removable edges, removable doubletons, removable classes, wheel-like
//! hubs, the triangle condition, near-bipartite detection, and the
//! bipartite non-removability witness.

use crate::graph::{EdgeId, EdgeSet, MultiGraph, Vertex, VertexSet};
use crate::matching::{enumerate_perfect_matchings, is_matching_covered};

/// A removable class: a single removable edge, or a removable doubleton.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum RemovableClass {
    Edge(EdgeId),
    Doubleton(EdgeId, EdgeId),
}

impl RemovableClass {
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        match *self {
            RemovableClass::Edge(e) => vec![e],
            RemovableClass::Doubleton(e, f) => vec![e, f],
        }
    }

    /// True when some edge of the class is incident with `v`.
    pub fn meets_vertex(&self, g: &MultiGraph, v: Vertex) -> bool {
        self.edge_ids().iter().any(|&e| {
            g.endpoints(e).is_some_and(|[a, b]| a == v || b == v)
        })
    }
}

/// Delete-and-test: `G − e` is matching covered.
pub fn is_removable_edge(g: &MultiGraph, e: EdgeId) -> bool {
    is_matching_covered(&g.delete_edges(&[e]).expect("live edge"))
}

/// `G − e − f` is matching covered but neither single deletion is.
pub fn is_removable_doubleton(g: &MultiGraph, e: EdgeId, f: EdgeId) -> bool {
    if e == f {
        return false;
    }
    !is_removable_edge(g, e)
        && !is_removable_edge(g, f)
        && is_matching_covered(&g.delete_edges(&[e, f]).expect("live edges"))
}

const CLASS_SCAN_PM_CAP: usize = 200_000;

/// All removable classes of a matching covered graph, removable edges first
/// (ascending by id) followed by doubletons (ascending lexicographically).
/// Doubleton candidates are restricted to pairs of non-removable edges, as
/// the definition demands.
pub fn removable_classes(g: &MultiGraph) -> Vec<RemovableClass> {
    match enumerate_perfect_matchings(g, CLASS_SCAN_PM_CAP) {
        Ok(pms) => classes_from_pm_list(g, &pms.iter().map(|m| m.0).collect::<Vec<_>>()),
        Err(_) => classes_by_deletion(g),
    }
}

/// Classes computed from the full perfect matching list: deleting edges
/// never creates matchings, so the matchings of `G − F` are exactly the
/// matchings of `G` avoiding `F`.
fn classes_from_pm_list(g: &MultiGraph, pms: &[EdgeSet]) -> Vec<RemovableClass> {
    let all = g.all_edge_set();
    let n = g.n();
    let covered_avoiding = |banned: EdgeSet| -> Option<EdgeSet> {
        let mut union = EdgeSet::EMPTY;
        let mut any = false;
        for &pm in pms {
            if pm.intersection(banned).is_empty() {
                union = union.union(pm);
                any = true;
            }
        }
        any.then_some(union)
    };
    let connected_without = |banned: &[EdgeId]| -> bool {
        g.delete_edges(banned).expect("live edges").is_connected()
    };
    let mut out = Vec::new();
    let mut nonremovable = Vec::new();
    for e in g.edge_ids() {
        let mut banned = EdgeSet::EMPTY;
        banned.insert(e);
        let mut target = all;
        target.remove(e);
        let ok = n >= 2
            && covered_avoiding(banned).is_some_and(|u| target.0 & !u.0 == 0)
            && connected_without(&[e]);
        if ok {
            out.push(RemovableClass::Edge(e));
        } else {
            nonremovable.push(e);
        }
    }
    for (i, &e) in nonremovable.iter().enumerate() {
        for &f in &nonremovable[i + 1..] {
            let mut banned = EdgeSet::EMPTY;
            banned.insert(e);
            banned.insert(f);
            let mut target = all;
            target.remove(e);
            target.remove(f);
            let ok = covered_avoiding(banned).is_some_and(|u| target.0 & !u.0 == 0)
                && connected_without(&[e, f]);
            if ok {
                out.push(RemovableClass::Doubleton(e, f));
            }
        }
    }
    out
}

/// Plain delete-and-test scan; the fallback when the matching list is too
/// large to enumerate.
fn classes_by_deletion(g: &MultiGraph) -> Vec<RemovableClass> {
    let mut out = Vec::new();
    let mut nonremovable = Vec::new();
    for e in g.edge_ids() {
        if is_removable_edge(g, e) {
            out.push(RemovableClass::Edge(e));
        } else {
            nonremovable.push(e);
        }
    }
    for (i, &e) in nonremovable.iter().enumerate() {
        for &f in &nonremovable[i + 1..] {
            if is_matching_covered(&g.delete_edges(&[e, f]).expect("live edges")) {
                out.push(RemovableClass::Doubleton(e, f));
            }
        }
    }
    out
}

/// First removable doubleton whose removal leaves a bipartite graph.
pub fn is_near_bipartite(g: &MultiGraph) -> Option<(EdgeId, EdgeId)> {
    removable_classes(g).into_iter().find_map(|c| match c {
        RemovableClass::Doubleton(e, f) => {
            let rest = g.delete_edges(&[e, f]).expect("live edges");
            rest.is_bipartite().then_some((e, f))
        }
        RemovableClass::Edge(_) => None,
    })
}

/// Vertices meeting an edge of every removable class. Nonempty exactly when
/// the graph is wheel-like.
pub fn wheel_like_hubs(g: &MultiGraph) -> VertexSet {
    let classes = removable_classes(g);
    let mut hubs = VertexSet::EMPTY;
    for v in 0..g.n() {
        if classes.iter().all(|c| c.meets_vertex(g, v)) {
            hubs.insert(v);
        }
    }
    hubs
}

pub fn is_wheel_like(g: &MultiGraph) -> bool {
    !wheel_like_hubs(g).is_empty()
}

/// Syntactic condition forcing non-removability: some end `u` of `e` has
/// exactly three neighbors, `e` is the only edge from `u` to its far end,
/// and the two remaining neighbors of `u` are adjacent (so `u` lies in a
/// triangle avoiding `e`).
pub fn triangle_condition(g: &MultiGraph, e: EdgeId) -> bool {
    let [a, b] = match g.endpoints(e) {
        Some(ends) => ends,
        None => return false,
    };
    for (u, other) in [(a, b), (b, a)] {
        let nbrs = g.neighbors(u);
        if nbrs.len() != 3 {
            continue;
        }
        if g.edges_between(u, other).len() != 1 {
            continue;
        }
        let rest: Vec<Vertex> = nbrs.iter().filter(|&w| w != other).collect();
        if g.adjacent(rest[0], rest[1]) {
            return true;
        }
    }
    false
}

/// For a non-removable edge `uv` of a bipartite matching covered graph,
/// finds the structural witness: nonempty proper `A1 ⊆ A`, `B1 ⊆ B` with
/// `G[A1 ∪ B1]` matching covered, `u ∈ A1`, `v ∈ B∖B1`, and `uv` the only
/// edge from `A1` to `B∖B1`. Returns `None` exactly when `e` is removable.
pub fn bipartite_nonremovable_witness(
    g: &MultiGraph,
    e: EdgeId,
) -> Option<(VertexSet, VertexSet)> {
    let [u, v] = g.endpoints(e).expect("live edge");
    let (mut a, mut b) = g.bipartition().ok()?;
    if !a.contains(u) {
        std::mem::swap(&mut a, &mut b);
    }
    debug_assert!(a.contains(u) && b.contains(v));
    let a_others: Vec<Vertex> = a.iter().filter(|&w| w != u).collect();
    let b_pool: Vec<Vertex> = b.iter().filter(|&w| w != v).collect();
    // Subset masks in ascending order give a deterministic first witness.
    for a_mask in 0u64..(1 << a_others.len()) {
        let mut a1 = VertexSet::singleton(u);
        for (i, &w) in a_others.iter().enumerate() {
            if a_mask >> i & 1 == 1 {
                a1.insert(w);
            }
        }
        if a1 == a {
            continue;
        }
        for b_mask in 1u64..(1 << b_pool.len()) {
            let mut b1 = VertexSet::EMPTY;
            for (i, &w) in b_pool.iter().enumerate() {
                if b_mask >> i & 1 == 1 {
                    b1.insert(w);
                }
            }
            if b1.len() != a1.len() {
                continue;
            }
            let b_rest = b.minus(b1);
            let mut crossing = EdgeSet::EMPTY;
            for (id, x, y) in g.edges() {
                let (p, q) = if a1.contains(x) { (x, y) } else { (y, x) };
                if a1.contains(p) && b_rest.contains(q) {
                    crossing.insert(id);
                }
            }
            let mut only_e = EdgeSet::EMPTY;
            only_e.insert(e);
            if crossing != only_e {
                continue;
            }
            let keep = a1.union(b1);
            let induced = g.delete_vertices(keep.complement(g.n()));
            if is_matching_covered(&induced) {
                return Some((a1, b1));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, odd_wheel, NamedGraph};

    fn cycle(n: usize) -> MultiGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::new(n, &edges).unwrap()
    }

    fn k33() -> MultiGraph {
        let mut edges = Vec::new();
        for x in 0..3 {
            for y in 3..6 {
                edges.push((x, y));
            }
        }
        MultiGraph::new(6, &edges).unwrap()
    }

    #[test]
    fn w5_spokes_are_removable_rim_is_not() {
        let w5 = named_graph(NamedGraph::W5);
        for (e, u, v) in w5.edges() {
            let spoke = u == 5 || v == 5;
            assert_eq!(is_removable_edge(&w5, e), spoke, "{u}-{v}");
        }
    }

    #[test]
    fn k4_has_three_doubletons_and_no_removable_edges() {
        let k4 = named_graph(NamedGraph::K4);
        let classes = removable_classes(&k4);
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| matches!(c, RemovableClass::Doubleton(..))));
        for c in &classes {
            if let RemovableClass::Doubleton(e, f) = *c {
                assert!(is_removable_doubleton(&k4, e, f));
                let [a, b] = k4.endpoints(e).unwrap();
                let [x, y] = k4.endpoints(f).unwrap();
                let ends = VertexSet::from_iter([a, b, x, y]);
                assert_eq!(ends.len(), 4, "doubleton edges are vertex-disjoint");
            }
        }
    }

    #[test]
    fn prism_has_three_doubletons_and_no_removable_edge() {
        let c6bar = named_graph(NamedGraph::C6Bar);
        let classes = removable_classes(&c6bar);
        let edges: Vec<_> = classes
            .iter()
            .filter(|c| matches!(c, RemovableClass::Edge(_)))
            .collect();
        assert!(edges.is_empty());
        assert_eq!(classes.len(), 3);
    }

    #[test]
    fn r8_pattern_is_two_doubletons_plus_one_removable_edge() {
        let r8 = named_graph(NamedGraph::R8);
        let classes = removable_classes(&r8);
        let mut edge_classes = Vec::new();
        let mut doubletons = Vec::new();
        for c in classes {
            match c {
                RemovableClass::Edge(e) => edge_classes.push(e),
                RemovableClass::Doubleton(e, f) => doubletons.push((e, f)),
            }
        }
        assert_eq!(doubletons.len(), 2);
        assert_eq!(edge_classes.len(), 1);
        // The bold edge: the middle internal vertex to its leaf.
        assert_eq!(r8.endpoints(edge_classes[0]).unwrap(), [1, 5]);
        // No two nonadjacent removable edges, so a single removable edge.
        for (e, f) in doubletons {
            assert!(is_removable_doubleton(&r8, e, f));
        }
    }

    #[test]
    fn w7_classes_are_exactly_the_spokes() {
        let w7 = named_graph(NamedGraph::W7);
        let classes = removable_classes(&w7);
        assert_eq!(classes.len(), 7);
        for c in &classes {
            match *c {
                RemovableClass::Edge(e) => {
                    let [u, v] = w7.endpoints(e).unwrap();
                    assert!(u == 7 || v == 7);
                }
                RemovableClass::Doubleton(..) => panic!("no doubletons in W7"),
            }
        }
    }

    #[test]
    fn near_bipartite_fixtures() {
        assert!(is_near_bipartite(&named_graph(NamedGraph::K4)).is_some());
        assert!(is_near_bipartite(&named_graph(NamedGraph::C6Bar)).is_some());
        assert!(is_near_bipartite(&named_graph(NamedGraph::R8)).is_some());
        assert!(is_near_bipartite(&named_graph(NamedGraph::W7)).is_none());
    }

    #[test]
    fn hub_sets() {
        assert_eq!(wheel_like_hubs(&named_graph(NamedGraph::W5)), VertexSet::singleton(5));
        assert_eq!(wheel_like_hubs(&named_graph(NamedGraph::C6Bar)), VertexSet::EMPTY);
        assert_eq!(wheel_like_hubs(&named_graph(NamedGraph::K4)), VertexSet::full(4));
        assert!(!is_wheel_like(&named_graph(NamedGraph::R8)));
    }

    #[test]
    fn triangle_condition_fixtures() {
        let w5 = named_graph(NamedGraph::W5);
        let rim = w5.edges_between(0, 1)[0];
        assert!(triangle_condition(&w5, rim));
        let spoke = w5.edges_between(0, 5)[0];
        assert!(!triangle_condition(&w5, spoke));
        let k33 = k33();
        for e in k33.edge_ids() {
            assert!(!triangle_condition(&k33, e));
        }
        // A doubled far edge breaks the uniqueness requirement.
        let doubled = odd_wheel(5, Some(&[2, 1, 1, 1, 1])).unwrap();
        for e in doubled.edges_between(0, 5) {
            assert!(!triangle_condition(&doubled, e));
            assert!(is_removable_edge(&doubled, e));
        }
    }

    #[test]
    fn bipartite_witness_fixtures() {
        let c4 = cycle(4);
        for e in c4.edge_ids() {
            let w = bipartite_nonremovable_witness(&c4, e);
            assert!(w.is_some());
            assert!(!is_removable_edge(&c4, e));
        }
        let k33 = k33();
        for e in k33.edge_ids() {
            assert!(bipartite_nonremovable_witness(&k33, e).is_none());
            assert!(is_removable_edge(&k33, e));
        }
        let c6 = cycle(6);
        for e in c6.edge_ids() {
            let (a1, b1) = bipartite_nonremovable_witness(&c6, e).expect("witness");
            assert!(!a1.is_empty() && !b1.is_empty());
        }
    }

    #[test]
    fn pm_list_scan_matches_delete_and_test() {
        for g in [
            named_graph(NamedGraph::K4),
            named_graph(NamedGraph::W5),
            named_graph(NamedGraph::C6Bar),
            named_graph(NamedGraph::R8),
            odd_wheel(5, Some(&[2, 2, 1, 1, 1])).unwrap(),
            cycle(6),
        ] {
            assert_eq!(removable_classes(&g), classes_by_deletion(&g), "{g:?}");
        }
    }
}
