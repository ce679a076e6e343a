//! Planarity. The verdict comes from an incremental face-embedding
//! algorithm (Demoucron-Malgrange-Pertuiset) run per biconnected component
//! of the underlying simple graph. The Kuratowski witness extraction is an
//! independent subdivision search used to cross-validate the verdict.

use crate::error::Refusal;
use crate::graph::{MultiGraph, Vertex};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Parallel edges never affect planarity of a loopless multigraph, so the
/// decision runs on the underlying simple graph.
pub fn is_planar(g: &MultiGraph) -> bool {
    let s = g.underlying_simple();
    biconnected_components(&s)
        .into_iter()
        .all(|edges| planar_biconnected(&edges))
}

/// Biconnected components as edge lists (classic lowpoint DFS).
fn biconnected_components(g: &MultiGraph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.n();
    let mut num = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut counter = 0usize;
    let mut stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut comps = Vec::new();

    fn dfs(
        g: &MultiGraph,
        v: Vertex,
        parent: Option<Vertex>,
        num: &mut [usize],
        low: &mut [usize],
        counter: &mut usize,
        stack: &mut Vec<(Vertex, Vertex)>,
        comps: &mut Vec<Vec<(Vertex, Vertex)>>,
    ) {
        num[v] = *counter;
        low[v] = *counter;
        *counter += 1;
        for w in g.neighbors(v).iter() {
            if Some(w) == parent {
                continue;
            }
            if num[w] == usize::MAX {
                stack.push((v, w));
                dfs(g, w, Some(v), num, low, counter, stack, comps);
                low[v] = low[v].min(low[w]);
                if low[w] >= num[v] {
                    let mut comp = Vec::new();
                    while let Some(&(a, b)) = stack.last() {
                        if num[a] >= num[w] {
                            comp.push((a, b));
                            stack.pop();
                        } else {
                            break;
                        }
                    }
                    comp.push(stack.pop().expect("tree edge on stack"));
                    comps.push(comp);
                }
            } else if num[w] < num[v] {
                stack.push((v, w));
                low[v] = low[v].min(num[w]);
            }
        }
    }

    for v in 0..n {
        if num[v] == usize::MAX {
            dfs(g, v, None, &mut num, &mut low, &mut counter, &mut stack, &mut comps);
        }
    }
    comps
}

/// Demoucron's algorithm on one biconnected component given by its edges.
fn planar_biconnected(edges: &[(Vertex, Vertex)]) -> bool {
    let verts: BTreeSet<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let nv = verts.len();
    if nv <= 4 {
        return true;
    }
    let m = edges.len();
    if m > 3 * nv - 6 {
        return false;
    }
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for list in adj.values_mut() {
        list.sort();
    }

    // Seed with any cycle.
    let cycle = find_cycle(&adj).expect("biconnected component with n >= 5 has a cycle");
    let mut faces: Vec<Vec<Vertex>> = vec![cycle.clone(), cycle.clone()];
    let mut embedded_v: BTreeSet<Vertex> = faces[0].iter().copied().collect();
    let mut embedded_e: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for i in 0..faces[0].len() {
        let a = faces[0][i];
        let b = faces[0][(i + 1) % faces[0].len()];
        embedded_e.insert(norm(a, b));
    }

    loop {
        let frags = fragments(edges, &adj, &embedded_v, &embedded_e);
        if frags.is_empty() {
            return true;
        }
        // For each fragment, the faces whose boundary contains all of its
        // attachment vertices.
        let mut chosen: Option<(usize, Vec<usize>)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| {
                    let fv: BTreeSet<Vertex> = face.iter().copied().collect();
                    frag.attachments.iter().all(|a| fv.contains(a))
                })
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return false;
            }
            let better = match &chosen {
                None => true,
                Some((_, best)) => admissible.len() < best.len(),
            };
            if better {
                chosen = Some((fi, admissible));
            }
        }
        let (fi, admissible) = chosen.expect("nonempty fragment list");
        let frag = &frags[fi];
        let face_idx = admissible[0];
        let path = alpha_path(frag, &embedded_v);

        // Split the chosen face along the path.
        let face = faces[face_idx].clone();
        let a = path[0];
        let b = *path.last().unwrap();
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let mut arc1 = Vec::new();
        let mut i = ia;
        loop {
            arc1.push(face[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % len;
        }
        let mut arc2 = Vec::new();
        let mut i = ib;
        loop {
            arc2.push(face[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % len;
        }
        let internal: Vec<Vertex> = path[1..path.len() - 1].to_vec();
        let mut face1 = arc1;
        face1.extend(internal.iter().rev());
        let mut face2 = arc2;
        face2.extend(internal.iter());
        faces[face_idx] = face1;
        faces.push(face2);

        for w in &path {
            embedded_v.insert(*w);
        }
        for pair in path.windows(2) {
            embedded_e.insert(norm(pair[0], pair[1]));
        }
    }
}

fn norm(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    (a.min(b), a.max(b))
}

/// Non-backtracking walk until a vertex repeats; valid because every vertex
/// of a biconnected block on 3 or more vertices has degree at least 2.
fn find_cycle(adj: &BTreeMap<Vertex, Vec<Vertex>>) -> Option<Vec<Vertex>> {
    let start = *adj.keys().next()?;
    let mut walk = vec![start];
    let mut pos = BTreeMap::from([(start, 0usize)]);
    let mut prev: Option<Vertex> = None;
    let mut cur = start;
    loop {
        let next = adj[&cur].iter().copied().find(|&w| Some(w) != prev)?;
        if let Some(&i) = pos.get(&next) {
            return Some(walk[i..].to_vec());
        }
        pos.insert(next, walk.len());
        walk.push(next);
        prev = Some(cur);
        cur = next;
    }
}

struct Fragment {
    /// Embedded vertices this fragment touches.
    attachments: Vec<Vertex>,
    /// Edges of the fragment.
    edges: Vec<(Vertex, Vertex)>,
}

fn fragments(
    all_edges: &[(Vertex, Vertex)],
    adj: &BTreeMap<Vertex, Vec<Vertex>>,
    embedded_v: &BTreeSet<Vertex>,
    embedded_e: &BTreeSet<(Vertex, Vertex)>,
) -> Vec<Fragment> {
    let mut frags = Vec::new();
    // Chords between embedded vertices.
    for &(u, v) in all_edges {
        if embedded_e.contains(&norm(u, v)) {
            continue;
        }
        if embedded_v.contains(&u) && embedded_v.contains(&v) {
            frags.push(Fragment { attachments: vec![u.min(v), u.max(v)], edges: vec![norm(u, v)] });
        }
    }
    // Components of the unembedded vertices plus their attachment edges.
    let free: BTreeSet<Vertex> = adj.keys().copied().filter(|v| !embedded_v.contains(v)).collect();
    let mut unseen = free.clone();
    while let Some(&start) = unseen.iter().next() {
        let mut comp = BTreeSet::from([start]);
        unseen.remove(&start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if free.contains(&w) && !comp.contains(&w) {
                    comp.insert(w);
                    unseen.remove(&w);
                    queue.push_back(w);
                }
            }
        }
        let mut attachments = BTreeSet::new();
        let mut edges = Vec::new();
        for &v in &comp {
            for &w in &adj[&v] {
                if comp.contains(&w) {
                    if v < w {
                        edges.push((v, w));
                    }
                } else {
                    attachments.insert(w);
                    edges.push(norm(v, w));
                }
            }
        }
        edges.sort();
        edges.dedup();
        frags.push(Fragment { attachments: attachments.into_iter().collect(), edges });
    }
    frags
}

/// A path between two distinct attachment vertices whose interior lies in
/// the fragment.
fn alpha_path(frag: &Fragment, embedded_v: &BTreeSet<Vertex>) -> Vec<Vertex> {
    let a = frag.attachments[0];
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(u, v) in &frag.edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for list in adj.values_mut() {
        list.sort();
    }
    // Chord fragment: direct edge.
    if frag.edges.len() == 1 {
        let (u, v) = frag.edges[0];
        return vec![u, v];
    }
    // BFS from a through fragment interior to the nearest other attachment.
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::from([a]);
    let mut seen = BTreeSet::from([a]);
    while let Some(v) = queue.pop_front() {
        for &w in adj.get(&v).map(|l| l.as_slice()).unwrap_or(&[]) {
            if seen.contains(&w) {
                continue;
            }
            if v != a && embedded_v.contains(&v) {
                continue; // only leave the embedded part at `a`
            }
            seen.insert(w);
            parent.insert(w, v);
            if embedded_v.contains(&w) && w != a {
                let mut path = vec![w];
                let mut x = w;
                while x != a {
                    x = parent[&x];
                    path.push(x);
                }
                path.reverse();
                return path;
            }
            queue.push_back(w);
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments");
}

/// Kind of forbidden subdivision.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` inside the host graph: branch vertices
/// plus internally disjoint paths between them.
#[derive(Clone, Debug)]
pub struct KuratowskiWitness {
    pub kind: WitnessKind,
    /// The branch vertices; for `K33` the first three form one color class.
    pub branch: Vec<Vertex>,
    /// `(i, j, path)` with `i`, `j` indices into `branch` and `path` the
    /// full vertex sequence from `branch[i]` to `branch[j]`.
    pub paths: Vec<(usize, usize, Vec<Vertex>)>,
}

/// Structural validation of a witness against the host graph.
pub fn validate_witness(g: &MultiGraph, w: &KuratowskiWitness) -> bool {
    let (nb, want_pairs): (usize, Vec<(usize, usize)>) = match w.kind {
        WitnessKind::K33 => (6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect()),
        WitnessKind::K5 => (5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect()),
    };
    if w.branch.len() != nb || w.paths.len() != want_pairs.len() {
        return false;
    }
    let branch_set: BTreeSet<Vertex> = w.branch.iter().copied().collect();
    if branch_set.len() != nb {
        return false;
    }
    let mut seen_pairs = BTreeSet::new();
    let mut interior_used: BTreeSet<Vertex> = BTreeSet::new();
    for (i, j, path) in &w.paths {
        if !seen_pairs.insert((*i.min(j), *i.max(j))) {
            return false;
        }
        if path.len() < 2 || path[0] != w.branch[*i] || *path.last().unwrap() != w.branch[*j] {
            return false;
        }
        for pair in path.windows(2) {
            if !g.adjacent(pair[0], pair[1]) {
                return false;
            }
        }
        for &v in &path[1..path.len() - 1] {
            if branch_set.contains(&v) || !interior_used.insert(v) {
                return false;
            }
        }
    }
    let seen: BTreeSet<(usize, usize)> = want_pairs.iter().copied().collect();
    seen_pairs == seen
}

/// Searches for a Kuratowski witness by picking branch vertices and then
/// backtracking over vertex-disjoint connecting paths. Complete at desk
/// scale; refuses when the step budget runs out.
pub fn kuratowski_witness(
    g: &MultiGraph,
    budget: u64,
) -> Result<Option<KuratowskiWitness>, Refusal> {
    let s = g.underlying_simple();
    let mut steps = budget;
    if let Some(w) = search_k33(&s, &mut steps)? {
        return Ok(Some(w));
    }
    if let Some(w) = search_k5(&s, &mut steps)? {
        return Ok(Some(w));
    }
    Ok(None)
}

fn spend(steps: &mut u64, budget_hint: u64) -> Result<(), Refusal> {
    if *steps == 0 {
        return Err(Refusal::WitnessBudget { budget: budget_hint });
    }
    *steps -= 1;
    Ok(())
}

fn search_k33(g: &MultiGraph, steps: &mut u64) -> Result<Option<KuratowskiWitness>, Refusal> {
    let budget0 = *steps;
    let cands: Vec<Vertex> = (0..g.n()).filter(|&v| g.neighbors(v).len() >= 3).collect();
    if cands.len() < 6 {
        return Ok(None);
    }
    let mut six = Vec::new();
    combos(&cands, 6, &mut six);
    for set in six {
        // Splits into two triples; fix set[0] on the A side to kill the swap.
        let rest: Vec<Vertex> = set[1..].to_vec();
        let mut pairs2 = Vec::new();
        combos(&rest, 2, &mut pairs2);
        for others in pairs2 {
            let a = vec![set[0], others[0], others[1]];
            let b: Vec<Vertex> = rest.iter().copied().filter(|v| !others.contains(v)).collect();
            let mut branch = a.clone();
            branch.extend(&b);
            let pairs: Vec<(usize, usize)> =
                (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
            if let Some(paths) = connect(g, &branch, &pairs, steps, budget0)? {
                return Ok(Some(KuratowskiWitness { kind: WitnessKind::K33, branch, paths }));
            }
        }
    }
    Ok(None)
}

fn search_k5(g: &MultiGraph, steps: &mut u64) -> Result<Option<KuratowskiWitness>, Refusal> {
    let budget0 = *steps;
    let cands: Vec<Vertex> = (0..g.n()).filter(|&v| g.neighbors(v).len() >= 4).collect();
    if cands.len() < 5 {
        return Ok(None);
    }
    let mut five = Vec::new();
    combos(&cands, 5, &mut five);
    for branch in five {
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        if let Some(paths) = connect(g, &branch, &pairs, steps, budget0)? {
            return Ok(Some(KuratowskiWitness { kind: WitnessKind::K5, branch, paths }));
        }
    }
    Ok(None)
}

fn combos(items: &[Vertex], k: usize, out: &mut Vec<Vec<Vertex>>) {
    fn rec(items: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), out);
}

type PathList = Vec<(usize, usize, Vec<Vertex>)>;

/// Backtracking search for internally disjoint paths realizing all `pairs`.
fn connect(
    g: &MultiGraph,
    branch: &[Vertex],
    pairs: &[(usize, usize)],
    steps: &mut u64,
    budget0: u64,
) -> Result<Option<PathList>, Refusal> {
    let branch_mask: u64 = branch.iter().fold(0, |m, &v| m | 1 << v);

    fn extend(
        g: &MultiGraph,
        branch: &[Vertex],
        branch_mask: u64,
        pairs: &[(usize, usize)],
        idx: usize,
        used: u64,
        acc: &mut PathList,
        steps: &mut u64,
        budget0: u64,
    ) -> Result<bool, Refusal> {
        if idx == pairs.len() {
            return Ok(true);
        }
        let (i, j) = pairs[idx];
        let (from, to) = (branch[i], branch[j]);
        // DFS over simple paths from `from` to `to` avoiding used interiors
        // and other branch vertices.
        fn dfs(
            g: &MultiGraph,
            branch: &[Vertex],
            branch_mask: u64,
            pairs: &[(usize, usize)],
            idx: usize,
            cur: &mut Vec<Vertex>,
            cur_mask: u64,
            used: u64,
            to: Vertex,
            acc: &mut PathList,
            steps: &mut u64,
            budget0: u64,
        ) -> Result<bool, Refusal> {
            spend(steps, budget0)?;
            let v = *cur.last().unwrap();
            for w in g.neighbors(v).iter() {
                if w == to {
                    let (i, j) = pairs[idx];
                    let mut path = cur.clone();
                    path.push(to);
                    let interior: u64 = path[1..path.len() - 1]
                        .iter()
                        .fold(0, |m, &x| m | 1 << x);
                    acc.push((i, j, path));
                    if extend(g, branch, branch_mask, pairs, idx + 1, used | interior, acc, steps, budget0)? {
                        return Ok(true);
                    }
                    acc.pop();
                } else if branch_mask >> w & 1 == 0
                    && used >> w & 1 == 0
                    && cur_mask >> w & 1 == 0
                {
                    cur.push(w);
                    if dfs(g, branch, branch_mask, pairs, idx, cur, cur_mask | 1 << w, used, to, acc, steps, budget0)? {
                        return Ok(true);
                    }
                    cur.pop();
                }
            }
            Ok(false)
        }
        let mut cur = vec![from];
        dfs(g, branch, branch_mask, pairs, idx, &mut cur, 0, used, to, acc, steps, budget0)
    }

    let mut acc = Vec::new();
    if extend(g, branch, branch_mask, pairs, 0, 0, &mut acc, steps, budget0)? {
        Ok(Some(acc))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, odd_wheel, NamedGraph};

    fn complete(n: usize) -> MultiGraph {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
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
    fn classic_verdicts() {
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&k33()));
        assert!(is_planar(&complete(4)));
        assert!(is_planar(&named_graph(NamedGraph::C6Bar)));
        assert!(is_planar(&named_graph(NamedGraph::R8)));
        assert!(!is_planar(&petersen()));
        for k in [3, 5, 7, 9] {
            assert!(is_planar(&odd_wheel(k, None).unwrap()));
        }
    }

    #[test]
    fn multiplicities_do_not_matter() {
        let doubled = odd_wheel(7, Some(&[2, 2, 2, 2, 2, 2, 2])).unwrap();
        assert!(is_planar(&doubled));
    }

    #[test]
    fn k6_and_k7_are_nonplanar() {
        assert!(!is_planar(&complete(6)));
        assert!(!is_planar(&complete(7)));
    }

    #[test]
    fn planar_after_edge_removal() {
        // K5 minus any edge is planar.
        let k5 = complete(5);
        for e in k5.edge_ids() {
            let g = k5.delete_edges(&[e]).unwrap();
            assert!(is_planar(&g));
        }
    }

    #[test]
    fn witness_matches_verdict_on_fixtures() {
        let budget = 10_000_000;
        let w = kuratowski_witness(&k33(), budget).unwrap().expect("K33 is its own witness");
        assert_eq!(w.kind, WitnessKind::K33);
        assert!(validate_witness(&k33(), &w));
        let w5 = kuratowski_witness(&complete(5), budget).unwrap().expect("K5 witness");
        assert!(validate_witness(&complete(5), &w5));
        assert!(kuratowski_witness(&named_graph(NamedGraph::W5), budget).unwrap().is_none());
        let pw = kuratowski_witness(&petersen(), budget).unwrap().expect("petersen witness");
        assert!(validate_witness(&petersen(), &pw));
        assert_eq!(pw.kind, WitnessKind::K33);
    }

    #[test]
    fn witness_budget_is_signalled() {
        assert!(matches!(
            kuratowski_witness(&petersen(), 3),
            Err(Refusal::WitnessBudget { .. })
        ));
    }

    #[test]
    fn disconnected_and_tree_inputs() {
        let forest = MultiGraph::new(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_planar(&forest));
        let single = MultiGraph::new(1, &[]).unwrap();
        assert!(is_planar(&single));
    }
}
