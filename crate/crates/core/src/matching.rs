//! Perfect matchings and the Tutte machinery: maximum matching (two
//! independent engines), perfect matching enumeration, barriers, forbidden
//! edges, matching covered and bicritical predicates.

use crate::error::Refusal;
use crate::graph::{EdgeId, EdgeSet, MultiGraph, Vertex, VertexSet};
use std::collections::VecDeque;

/// A matching, stored as a set of edge ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Matching(pub EdgeSet);

impl Matching {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ids(&self) -> Vec<EdgeId> {
        self.0.to_vec()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(e)
    }

    /// True when the edges are pairwise nonadjacent in `g`.
    pub fn is_valid(&self, g: &MultiGraph) -> bool {
        let mut covered = VertexSet::EMPTY;
        for e in self.0.iter() {
            match g.endpoints(e) {
                None => return false,
                Some([u, v]) => {
                    if covered.contains(u) || covered.contains(v) {
                        return false;
                    }
                    covered.insert(u);
                    covered.insert(v);
                }
            }
        }
        true
    }

    pub fn covered_vertices(&self, g: &MultiGraph) -> VertexSet {
        let mut covered = VertexSet::EMPTY;
        for e in self.0.iter() {
            if let Some([u, v]) = g.endpoints(e) {
                covered.insert(u);
                covered.insert(v);
            }
        }
        covered
    }

    pub fn is_perfect(&self, g: &MultiGraph) -> bool {
        self.is_valid(g) && self.covered_vertices(g) == VertexSet::full(g.n())
    }
}

/// A Tutte witness: a vertex set `S` with `o(G − S) = |S|`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Barrier(pub VertexSet);

/// Maximum-cardinality matching by augmenting paths with blossom
/// contraction (Edmonds). This is the production engine; see
/// [`max_matching_exhaustive`] for the independent oracle it is validated
/// against.
pub fn max_matching(g: &MultiGraph) -> Matching {
    let n = g.n();
    let adj: Vec<Vec<Vertex>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut mate: Vec<Option<Vertex>> = vec![None; n];
    // Greedy seed.
    for v in 0..n {
        if mate[v].is_none() {
            for &w in &adj[v] {
                if mate[w].is_none() {
                    mate[v] = Some(w);
                    mate[w] = Some(v);
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        if let Some(end) = find_augmenting_path(&adj, &mate, root) {
            augment(&mut mate, &end);
        }
    }
    let mut edges = EdgeSet::EMPTY;
    for v in 0..n {
        if let Some(w) = mate[v] {
            if v < w {
                let id = *g.edges_between(v, w).first().expect("mates are adjacent");
                edges.insert(id);
            }
        }
    }
    Matching(edges)
}

struct AugEnd {
    exposed: Vertex,
    parent: Vec<Option<Vertex>>,
    mate: Vec<Option<Vertex>>,
}

fn find_augmenting_path(
    adj: &[Vec<Vertex>],
    mate: &[Option<Vertex>],
    root: Vertex,
) -> Option<AugEnd> {
    let n = adj.len();
    let mut parent: Vec<Option<Vertex>> = vec![None; n];
    let mut base: Vec<Vertex> = (0..n).collect();
    let mut used = vec![false; n];
    used[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                // Odd cycle through the root side: contract the blossom.
                let cur_base = blossom_lca(mate, &parent, &base, v, to);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(&mut in_blossom, mate, &mut parent, &base, v, cur_base, to);
                mark_blossom_path(&mut in_blossom, mate, &mut parent, &base, to, cur_base, v);
                for u in 0..n {
                    if in_blossom[base[u]] {
                        base[u] = cur_base;
                        if !used[u] {
                            used[u] = true;
                            queue.push_back(u);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        return Some(AugEnd {
                            exposed: to,
                            parent,
                            mate: mate.to_vec(),
                        });
                    }
                    Some(m) => {
                        if !used[m] {
                            used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    None
}

fn blossom_lca(
    mate: &[Option<Vertex>],
    parent: &[Option<Vertex>],
    base: &[Vertex],
    a: Vertex,
    b: Vertex,
) -> Vertex {
    let mut seen = vec![false; base.len()];
    let mut v = a;
    loop {
        v = base[v];
        seen[v] = true;
        match mate[v] {
            None => break,
            Some(m) => match parent[m] {
                None => break,
                Some(p) => v = p,
            },
        }
    }
    let mut v = b;
    loop {
        v = base[v];
        if seen[v] {
            return v;
        }
        v = parent[mate[v].expect("non-root on alternating path")]
            .expect("alternating path reaches root");
    }
}

fn mark_blossom_path(
    in_blossom: &mut [bool],
    mate: &[Option<Vertex>],
    parent: &mut [Option<Vertex>],
    base: &[Vertex],
    mut v: Vertex,
    stop: Vertex,
    mut child: Vertex,
) {
    while base[v] != stop {
        let m = mate[v].expect("interior blossom vertex is matched");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("alternating structure");
    }
}

fn augment(mate: &mut [Option<Vertex>], end: &AugEnd) {
    let mut v = Some(end.exposed);
    while let Some(x) = v {
        let pv = end.parent[x].expect("path to root");
        let next = end.mate[pv];
        mate[x] = Some(pv);
        mate[pv] = Some(x);
        v = next;
    }
}

/// Exhaustive branch-and-bound maximum matching. Independent of the blossom
/// engine; intended as its cross-validation oracle on small graphs.
pub fn max_matching_exhaustive(g: &MultiGraph) -> Matching {
    fn rec(g: &MultiGraph, v: Vertex, covered: VertexSet, best: &mut usize, cur: &mut Vec<EdgeId>, out: &mut Vec<EdgeId>) {
        let n = g.n();
        let mut v = v;
        while v < n && covered.contains(v) {
            v += 1;
        }
        // Bound: even matching everything left cannot beat best.
        let remaining = (n - covered.len()) / 2;
        if cur.len() + remaining < *best || (cur.len() + remaining == *best && !out.is_empty()) {
            return;
        }
        if v == n {
            if cur.len() > *best || out.is_empty() {
                *best = cur.len();
                *out = cur.clone();
            }
            return;
        }
        for &(w, e) in g.edges_at(v) {
            if covered.contains(w) {
                continue;
            }
            let mut c2 = covered;
            c2.insert(v);
            c2.insert(w);
            cur.push(e);
            rec(g, v + 1, c2, best, cur, out);
            cur.pop();
        }
        // Leave v unmatched.
        let mut c2 = covered;
        c2.insert(v);
        rec(g, v + 1, c2, best, cur, out);
    }
    let mut best = 0;
    let mut cur = Vec::new();
    let mut out = Vec::new();
    rec(g, 0, VertexSet::EMPTY, &mut best, &mut cur, &mut out);
    Matching(EdgeSet::from_ids(out))
}

pub fn has_perfect_matching(g: &MultiGraph) -> bool {
    let n = g.n();
    if n % 2 == 1 {
        return false;
    }
    if (0..n).any(|v| g.degree(v) == 0) {
        return false;
    }
    max_matching(g).len() * 2 == n
}

/// Brute-force Tutte condition: `o(G − S) <= |S|` for every `S`. Exponential;
/// this is the built-in oracle for [`has_perfect_matching`].
pub fn has_pm_by_tutte(g: &MultiGraph) -> bool {
    tutte_violator(g).is_none()
}

/// First vertex set violating the Tutte condition, if any.
pub fn tutte_violator(g: &MultiGraph) -> Option<VertexSet> {
    let n = g.n();
    for mask in 0u64..(1u64 << n) {
        let s = VertexSet(mask);
        if odd_components(g, s) > s.len() {
            return Some(s);
        }
    }
    None
}

/// Number of odd-order components of `G − S`.
pub fn odd_components(g: &MultiGraph, s: VertexSet) -> usize {
    g.component_masks(s.0)
        .iter()
        .filter(|c| c.count_ones() % 2 == 1)
        .count()
}

/// Exhaustive enumeration of all perfect matchings, in the deterministic
/// order produced by always extending the lowest uncovered vertex along
/// edges in id order. Errors out when the count exceeds `cap`.
pub fn enumerate_perfect_matchings(
    g: &MultiGraph,
    cap: usize,
) -> Result<Vec<Matching>, Refusal> {
    let n = g.n();
    let mut out = Vec::new();
    if n % 2 == 1 {
        return Ok(out);
    }
    fn rec(
        g: &MultiGraph,
        covered: VertexSet,
        cur: EdgeSet,
        out: &mut Vec<Matching>,
        cap: usize,
    ) -> Result<(), Refusal> {
        let n = g.n();
        let mut v = 0;
        while v < n && covered.contains(v) {
            v += 1;
        }
        if v == n {
            if out.len() >= cap {
                return Err(Refusal::PmCapExceeded { cap });
            }
            out.push(Matching(cur));
            return Ok(());
        }
        let mut incident: Vec<(EdgeId, Vertex)> = g
            .edges_at(v)
            .iter()
            .filter(|&&(w, _)| !covered.contains(w))
            .map(|&(w, e)| (e, w))
            .collect();
        incident.sort();
        for (e, w) in incident {
            let mut c2 = covered;
            c2.insert(v);
            c2.insert(w);
            let mut m2 = cur;
            m2.insert(e);
            rec(g, c2, m2, out, cap)?;
        }
        Ok(())
    }
    rec(g, VertexSet::EMPTY, EdgeSet::EMPTY, &mut out, cap)?;
    Ok(out)
}

/// Enumeration without a cap, for internal use on desk-scale graphs.
pub(crate) fn all_perfect_matchings(g: &MultiGraph) -> Vec<Matching> {
    enumerate_perfect_matchings(g, usize::MAX).expect("uncapped")
}

/// True when `e` lies in no perfect matching. Callers must ensure the graph
/// has a perfect matching for the notion to match the usual definition.
pub fn is_forbidden(g: &MultiGraph, e: EdgeId) -> bool {
    let [u, v] = g.endpoints(e).expect("live edge");
    !has_perfect_matching(&g.delete_vertices(VertexSet::from_iter([u, v])))
}

/// Smallest-first search for a barrier containing both `u` and `v`;
/// subsets of equal size are scanned in ascending mask order. By the
/// barrier/forbidden correspondence this finds one exactly when the edge
/// `uv` is forbidden.
pub fn find_barrier_containing(g: &MultiGraph, u: Vertex, v: Vertex) -> Option<Barrier> {
    let n = g.n();
    debug_assert!(u != v && u < n && v < n);
    let others: Vec<Vertex> = (0..n).filter(|&w| w != u && w != v).collect();
    let base = VertexSet::from_iter([u, v]);
    for extra in 0..=others.len() {
        let mut found: Option<VertexSet> = None;
        for_each_subset_of_size(&others, extra, &mut |chosen| {
            if found.is_some() {
                return;
            }
            let s = base.union(VertexSet::from_iter(chosen.iter().copied()));
            if odd_components(g, s) == s.len() {
                found = Some(s);
            }
        });
        if let Some(s) = found {
            return Some(Barrier(s));
        }
    }
    None
}

fn for_each_subset_of_size(items: &[Vertex], k: usize, f: &mut impl FnMut(&[Vertex])) {
    fn rec(items: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, f: &mut impl FnMut(&[Vertex])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(k);
    rec(items, k, 0, &mut cur, f);
}

/// Perfect matching existence after deleting a vertex pair; the empty
/// remainder counts as vacuously matched.
fn pair_deletion_has_pm(g: &MultiGraph, u: Vertex, v: Vertex) -> bool {
    if g.n() == 2 {
        return true;
    }
    has_perfect_matching(&g.delete_vertices(VertexSet::from_iter([u, v])))
}

/// Connected, nontrivial, and no edge is forbidden.
pub fn is_matching_covered(g: &MultiGraph) -> bool {
    let n = g.n();
    if n < 2 || n % 2 == 1 || !g.is_connected() || !has_perfect_matching(g) {
        return false;
    }
    // One check per adjacent vertex pair covers all parallel copies.
    let mut pairs = std::collections::BTreeSet::new();
    for (_, u, v) in g.edges() {
        pairs.insert((u.min(v), u.max(v)));
    }
    pairs.iter().all(|&(u, v)| pair_deletion_has_pm(g, u, v))
}

/// Every pair deletion leaves a perfect matching.
pub fn is_bicritical(g: &MultiGraph) -> bool {
    let n = g.n();
    if n < 2 || n % 2 == 1 {
        return false;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !pair_deletion_has_pm(g, u, v) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, odd_wheel, NamedGraph};

    fn cycle(n: usize) -> MultiGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> MultiGraph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        MultiGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn max_matching_sizes() {
        assert_eq!(max_matching(&named_graph(NamedGraph::K4)).len(), 2);
        assert_eq!(max_matching(&cycle(5)).len(), 2);
        assert_eq!(max_matching(&named_graph(NamedGraph::W5)).len(), 3);
        let pet = petersen();
        assert_eq!(max_matching(&pet).len(), 5);
    }

    fn petersen() -> MultiGraph {
        MultiGraph::new(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn engines_agree_on_blossom_heavy_graphs() {
        // Two triangles joined by a path: forces blossom handling.
        let g = MultiGraph::new(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)],
        )
        .unwrap();
        assert_eq!(max_matching(&g).len(), max_matching_exhaustive(&g).len());
        assert_eq!(max_matching(&petersen()).len(), max_matching_exhaustive(&petersen()).len());
    }

    #[test]
    fn perfect_matching_counts() {
        let w5 = named_graph(NamedGraph::W5);
        assert_eq!(all_perfect_matchings(&w5).len(), 5);
        let k4 = named_graph(NamedGraph::K4);
        assert_eq!(all_perfect_matchings(&k4).len(), 3);
        assert!(all_perfect_matchings(&cycle(5)).is_empty());
        for m in all_perfect_matchings(&w5) {
            assert!(m.is_perfect(&w5));
        }
    }

    #[test]
    fn enumeration_cap_is_signalled() {
        let k4 = named_graph(NamedGraph::K4);
        assert_eq!(
            enumerate_perfect_matchings(&k4, 2),
            Err(Refusal::PmCapExceeded { cap: 2 })
        );
    }

    #[test]
    fn odd_component_counts() {
        let k4 = named_graph(NamedGraph::K4);
        assert_eq!(odd_components(&k4, VertexSet::singleton(0)), 1);
        // Deleting the hub and two nonadjacent rim vertices of W5 leaves one
        // isolated rim vertex plus a rim edge.
        let w5 = named_graph(NamedGraph::W5);
        assert_eq!(odd_components(&w5, VertexSet::from_iter([5, 0, 2])), 1);
        let two_comps = MultiGraph::new(5, &[(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(odd_components(&two_comps, VertexSet::EMPTY), 1);
    }

    #[test]
    fn forbidden_edges() {
        let k4 = named_graph(NamedGraph::K4);
        for e in k4.edge_ids() {
            assert!(!is_forbidden(&k4, e));
        }
        let p4 = path(4);
        let middle = p4.edges_between(1, 2)[0];
        assert!(is_forbidden(&p4, middle));
        assert!(!is_forbidden(&p4, p4.edges_between(0, 1)[0]));
    }

    #[test]
    fn barrier_matches_forbidden_on_w7_variant() {
        // Delete a rim edge at a degree-3 vertex sitting in a spoke triangle:
        // the two triangle partners then form a barrier.
        let w7 = named_graph(NamedGraph::W7);
        let rim_edge = w7.edges_between(0, 6)[0];
        let g = w7.delete_edges(&[rim_edge]).unwrap();
        let b = find_barrier_containing(&g, 1, 7).expect("barrier");
        assert_eq!(b.0, VertexSet::from_iter([1, 7]));
        assert!(is_forbidden(&g, g.edges_between(1, 7)[0]));
        // No forbidden edges in K4, so no barrier through any edge.
        let k4 = named_graph(NamedGraph::K4);
        assert!(find_barrier_containing(&k4, 0, 1).is_none());
    }

    #[test]
    fn matching_covered_and_bicritical() {
        let w5 = named_graph(NamedGraph::W5);
        assert!(is_matching_covered(&w5));
        assert!(is_bicritical(&w5));
        let c6 = cycle(6);
        assert!(is_matching_covered(&c6));
        assert!(!is_bicritical(&c6));
        let star = MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_matching_covered(&star));
        let k2 = MultiGraph::new(2, &[(0, 1)]).unwrap();
        assert!(is_matching_covered(&k2));
    }

    #[test]
    fn tutte_brute_force_agrees_on_small_graphs() {
        let graphs = [
            named_graph(NamedGraph::K4),
            named_graph(NamedGraph::W5),
            named_graph(NamedGraph::C6Bar),
            cycle(6),
            cycle(5),
            path(4),
            path(5),
            petersen(),
            MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(has_perfect_matching(g), has_pm_by_tutte(g), "{g:?}");
        }
    }

    #[test]
    fn doubled_spoke_wheel_has_parallel_pm_choices() {
        let g = odd_wheel(5, Some(&[2, 1, 1, 1, 1])).unwrap();
        let pms = all_perfect_matchings(&g);
        assert_eq!(pms.len(), 6);
        assert!(is_matching_covered(&g));
    }
}
