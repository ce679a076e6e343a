//! Splicings of odd wheels: instance enumeration up to rim symmetry, the
//! closed-form wheel-likeness predicate, and the census comparing it with
//! the brute-force predicate on every bounded instance.

use crate::cuts::is_brick;
use crate::graph::{odd_wheel, MultiGraph, SpliceMap, Vertex};
use crate::planarity::is_planar;
use crate::removable::is_wheel_like;
use crate::iso::canonical_form;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Where a wheel is spliced: at its hub, or at the fixed rim vertex
/// `k − 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Attach {
    Hub,
    Rim,
}

/// One splicing instance of two odd wheels. Spoke multiplicities are per
/// rim vertex; the `assignment` matrix says how many joining edges run
/// between each stub slot of the first wheel and each of the second.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WiWjInstance {
    pub s: usize,
    pub t: usize,
    pub g_mults: Vec<u32>,
    pub h_mults: Vec<u32>,
    pub g_attach: Attach,
    pub h_attach: Attach,
    pub assignment: Vec<Vec<u32>>,
}

/// Stub slots of a wheel at its attachment vertex: the slot's far vertex
/// and its capacity (number of parallel edges).
fn slots(k: usize, mults: &[u32], attach: Attach) -> Vec<(Vertex, u32)> {
    match attach {
        Attach::Hub => (0..k).map(|i| (i, mults[i])).collect(),
        // Star of rim vertex k-1: rim edges to k-2 and 0, spokes to the hub.
        Attach::Rim => vec![(k - 2, 1), (0, 1), (k, mults[k - 1])],
    }
}

fn attach_vertex(k: usize, attach: Attach) -> Vertex {
    match attach {
        Attach::Hub => k,
        Attach::Rim => k - 1,
    }
}

/// A constructed instance: both wheels, the splice, and the stub pairing.
pub struct BuiltInstance {
    pub g: MultiGraph,
    pub h: MultiGraph,
    pub u: Vertex,
    pub v: Vertex,
    pub graph: MultiGraph,
    /// Joined stub pairs `(far vertex in g, far vertex in h)`, one per
    /// joining edge.
    pub stub_pairs: Vec<(Vertex, Vertex)>,
}

impl WiWjInstance {
    pub fn degree(&self) -> u32 {
        self.assignment.iter().flatten().sum()
    }

    pub fn build(&self) -> BuiltInstance {
        let g = odd_wheel(self.s, Some(&self.g_mults)).expect("valid wheel");
        let h = odd_wheel(self.t, Some(&self.h_mults)).expect("valid wheel");
        let u = attach_vertex(self.s, self.g_attach);
        let v = attach_vertex(self.t, self.h_attach);
        let g_slots = slots(self.s, &self.g_mults, self.g_attach);
        let h_slots = slots(self.t, &self.h_mults, self.h_attach);
        // Per-slot edge queues at the attachment vertices.
        let mut g_queue: BTreeMap<Vertex, Vec<crate::graph::EdgeId>> = BTreeMap::new();
        for &(w, e) in g.edges_at(u) {
            g_queue.entry(w).or_default().push(e);
        }
        let mut h_queue: BTreeMap<Vertex, Vec<crate::graph::EdgeId>> = BTreeMap::new();
        for &(w, e) in h.edges_at(v) {
            h_queue.entry(w).or_default().push(e);
        }
        let mut pairs = Vec::new();
        let mut stub_pairs = Vec::new();
        for (i, &(gw, _)) in g_slots.iter().enumerate() {
            for (j, &(hw, _)) in h_slots.iter().enumerate() {
                for _ in 0..self.assignment[i][j] {
                    let ge = g_queue.get_mut(&gw).unwrap().pop().unwrap();
                    let he = h_queue.get_mut(&hw).unwrap().pop().unwrap();
                    pairs.push((ge, he));
                    stub_pairs.push((gw, hw));
                }
            }
        }
        let map = SpliceMap { u, v, pairs };
        let spliced = g.splice(&h, &map).expect("degree compatible by construction");
        BuiltInstance { g, h, u, v, graph: spliced.graph, stub_pairs }
    }
}

/// Hub designations under which a multigraph is an odd wheel: vertices `h`
/// adjacent to everything, whose removal leaves a single odd cycle, with
/// every parallel class incident to `h`.
pub fn odd_wheel_hubs(g: &MultiGraph) -> Vec<Vertex> {
    let n = g.n();
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    let simple = g.underlying_simple();
    let mut hubs = Vec::new();
    for h in 0..n {
        if simple.degree(h) != n - 1 {
            continue;
        }
        let rest = simple.delete_vertices(crate::graph::VertexSet::singleton(h));
        let cycle = rest.is_connected() && (0..rest.n()).all(|v| rest.degree(v) == 2);
        if !cycle {
            continue;
        }
        if g.parallel_classes().iter().all(|&(a, b, _)| a == h || b == h) {
            hubs.push(h);
        }
    }
    hubs
}

/// The underlying simple graph is an odd wheel and all multiple edges are
/// incident with one of its hubs.
pub fn is_odd_wheel_with_hub_multiples(g: &MultiGraph) -> bool {
    !odd_wheel_hubs(g).is_empty()
}

/// The instance does not satisfy the predicate's precondition: the spliced
/// graph is not a brick.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Inapplicable;

/// Closed-form evaluation of the wheel-likeness statements on a built
/// instance (brickness already known). True iff some presentation has:
/// exactly one attachment at a designated hub, at least six vertices on the
/// hub-attached side, all multiple edges hub-incident on both sides, and
/// the two rim-neighbor stubs of the rim attachment landing on distinct
/// nonadjacent rim vertices of the hub-attached wheel.
pub fn closed_form(built: &BuiltInstance) -> bool {
    let forward: Vec<(Vertex, Vertex)> = built.stub_pairs.clone();
    let backward: Vec<(Vertex, Vertex)> = built.stub_pairs.iter().map(|&(a, b)| (b, a)).collect();
    for (gw, u, hw, v, pairs) in [
        (&built.g, built.u, &built.h, built.v, &forward),
        (&built.h, built.v, &built.g, built.u, &backward),
    ] {
        if !odd_wheel_hubs(gw).contains(&u) {
            continue;
        }
        if gw.n() < 6 {
            continue;
        }
        for w in odd_wheel_hubs(hw) {
            if w == v {
                continue;
            }
            let rim_nbrs: Vec<Vertex> = hw.neighbors(v).iter().filter(|&x| x != w).collect();
            if rim_nbrs.len() != 2 {
                continue;
            }
            // Hub candidacy of w forces both rim edges at v to be simple,
            // so each rim neighbor appears in exactly one stub pair.
            let find_stub = |p: Vertex| -> Option<Vertex> {
                let mut hits = pairs.iter().filter(|&&(_, hs)| hs == p).map(|&(gs, _)| gs);
                let first = hits.next();
                if hits.next().is_some() {
                    return None;
                }
                first
            };
            let (g1, g2) = match (find_stub(rim_nbrs[0]), find_stub(rim_nbrs[1])) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            if g1 != g2 && !gw.adjacent(g1, g2) {
                return true;
            }
        }
    }
    false
}

/// Spec-facing predicate: checks the brick precondition itself.
pub fn wiwj_predicate(inst: &WiWjInstance) -> Result<bool, Inapplicable> {
    let built = inst.build();
    if !is_brick(&built.graph) {
        return Err(Inapplicable);
    }
    Ok(closed_form(&built))
}

/// Enumeration bounds for the census.
#[derive(Clone, Copy, Debug)]
pub struct WiWjBounds {
    /// Largest rim length (odd sizes 3..=max_wheel are swept).
    pub max_wheel: usize,
    /// Cap on freely doubled spokes per wheel; attachment spokes of
    /// rim-attached wheels take whatever multiplicity degree compatibility
    /// forces instead.
    pub max_free_doubles: usize,
}

impl Default for WiWjBounds {
    fn default() -> Self {
        WiWjBounds { max_wheel: 7, max_free_doubles: 2 }
    }
}

/// Symmetry operation on one side: reindexing of slots and of rim spokes
/// (maps are new-index -> old-index).
#[derive(Clone)]
struct SideOp {
    slot_map: Vec<usize>,
    mult_map: Vec<usize>,
}

fn side_ops(k: usize, attach: Attach) -> Vec<SideOp> {
    let mut ops = Vec::new();
    match attach {
        Attach::Hub => {
            // Full dihedral group acting identically on slots and spokes.
            for r in 0..k {
                let rot: Vec<usize> = (0..k).map(|i| (i + r) % k).collect();
                ops.push(SideOp { slot_map: rot.clone(), mult_map: rot });
                let refl: Vec<usize> = (0..k).map(|i| (r + k - i) % k).collect();
                ops.push(SideOp { slot_map: refl.clone(), mult_map: refl });
            }
        }
        Attach::Rim => {
            // Stabilizer of rim vertex k-1: identity and the reflection
            // through it, which swaps the two rim-edge slots.
            ops.push(SideOp { slot_map: vec![0, 1, 2], mult_map: (0..k).collect() });
            ops.push(SideOp {
                slot_map: vec![1, 0, 2],
                mult_map: (0..k).map(|i| (2 * (k - 1) - i) % k).collect(),
            });
        }
    }
    ops
}

fn apply_mult(op: &SideOp, mults: &[u32]) -> Vec<u32> {
    op.mult_map.iter().map(|&i| mults[i]).collect()
}

/// The vector is the lexicographic minimum of its symmetry orbit.
fn vector_is_canonical(mults: &[u32], ops: &[SideOp]) -> bool {
    ops.iter().all(|op| apply_mult(op, mults).as_slice() >= mults)
}

/// Subgroup fixing the multiplicity vector.
fn stabilizer(mults: &[u32], ops: &[SideOp]) -> Vec<SideOp> {
    ops.iter().filter(|op| apply_mult(op, mults) == mults).cloned().collect()
}

/// The matrix is minimal in its orbit under the two stabilizers.
fn matrix_is_canonical(m: &[Vec<u32>], g_stab: &[SideOp], h_stab: &[SideOp]) -> bool {
    use std::cmp::Ordering;
    for gop in g_stab {
        for hop in h_stab {
            // Row-major comparison of the remapped matrix with `m`.
            let cmp = gop
                .slot_map
                .iter()
                .enumerate()
                .flat_map(|(i, &gi)| {
                    hop.slot_map.iter().enumerate().map(move |(j, &hj)| (m[gi][hj], (i, j)))
                })
                .find_map(|(remapped, (i, j))| match remapped.cmp(&m[i][j]) {
                    Ordering::Equal => None,
                    other => Some(other),
                })
                .unwrap_or(Ordering::Equal);
            if cmp == Ordering::Less {
                return false;
            }
        }
    }
    true
}

/// Spoke multiplicity vectors with at most `max_doubles` doubled entries;
/// `forced_last` pins the final entry (the rim-attachment spoke).
fn mult_vectors(k: usize, max_doubles: usize, forced_last: Option<u32>) -> Vec<Vec<u32>> {
    let free = if forced_last.is_some() { k - 1 } else { k };
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free) {
        if mask.count_ones() as usize > max_doubles {
            continue;
        }
        let mut v: Vec<u32> = (0..free).map(|i| 1 + (mask >> i & 1) as u32).collect();
        if let Some(f) = forced_last {
            v.push(f);
        }
        out.push(v);
    }
    out
}

/// All nonnegative integer matrices with the given row and column sums.
fn assignment_matrices(rows: &[u32], cols: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn fill_row(
        row_sum: u32,
        col_left: &mut [u32],
        j: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if j == col_left.len() {
            if row_sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = row_sum.min(col_left[j]);
        for take in 0..=cap {
            cur.push(take);
            col_left[j] -= take;
            fill_row(row_sum - take, col_left, j + 1, cur, out);
            col_left[j] += take;
            cur.pop();
        }
    }
    fn rec(
        rows: &[u32],
        i: usize,
        col_left: &mut Vec<u32>,
        acc: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if i == rows.len() {
            if col_left.iter().all(|&c| c == 0) {
                out.push(acc.clone());
            }
            return;
        }
        let mut row_choices = Vec::new();
        fill_row(rows[i], col_left, 0, &mut Vec::new(), &mut row_choices);
        for choice in row_choices {
            for (j, &take) in choice.iter().enumerate() {
                col_left[j] -= take;
            }
            acc.push(choice.clone());
            rec(rows, i + 1, col_left, acc, out);
            acc.pop();
            for (j, &take) in choice.iter().enumerate() {
                col_left[j] += take;
            }
        }
    }
    let mut out = Vec::new();
    rec(rows, 0, &mut cols.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Enumerates all bounded instances, one representative per rim-symmetry
/// orbit, in a deterministic order. Multiplicity vectors are restricted to
/// dihedral-minimal representatives, then assignment matrices to
/// representatives under the stabilizers of the chosen vectors.
pub fn enumerate_instances(bounds: &WiWjBounds) -> Vec<WiWjInstance> {
    let sizes: Vec<usize> = (3..=bounds.max_wheel).step_by(2).collect();
    let mut out = Vec::new();
    for &s in &sizes {
        for &t in &sizes {
            if s > t {
                continue;
            }
            for (g_attach, h_attach) in [
                (Attach::Hub, Attach::Hub),
                (Attach::Hub, Attach::Rim),
                (Attach::Rim, Attach::Hub),
                (Attach::Rim, Attach::Rim),
            ] {
                instances_for(s, t, g_attach, h_attach, bounds, &mut out);
            }
        }
    }
    out
}

fn instances_for(
    s: usize,
    t: usize,
    g_attach: Attach,
    h_attach: Attach,
    bounds: &WiWjBounds,
    out: &mut Vec<WiWjInstance>,
) {
    let md = bounds.max_free_doubles;
    let g_ops = side_ops(s, g_attach);
    let h_ops = side_ops(t, h_attach);
    // Free spoke patterns for the first wheel; the rim-attach spoke of a
    // rim-attached wheel ranges over 1..=2 for (rim, rim) and is forced by
    // the partner degree otherwise.
    let g_base: Vec<Vec<u32>> = match g_attach {
        Attach::Hub => mult_vectors(s, md, None),
        Attach::Rim => [1u32, 2]
            .iter()
            .flat_map(|&c| mult_vectors(s, md, Some(c)))
            .collect(),
    };
    for g_mults in g_base {
        if !vector_is_canonical(&g_mults, &g_ops) {
            continue;
        }
        let d = match g_attach {
            Attach::Hub => g_mults.iter().sum::<u32>(),
            Attach::Rim => 2 + g_mults[s - 1],
        };
        let h_candidates: Vec<Vec<u32>> = match h_attach {
            Attach::Hub => mult_vectors(t, md, None)
                .into_iter()
                .filter(|m| m.iter().sum::<u32>() == d)
                .collect(),
            Attach::Rim => {
                if d < 3 {
                    Vec::new()
                } else {
                    mult_vectors(t, md, Some(d - 2))
                }
            }
        };
        let g_stab = stabilizer(&g_mults, &g_ops);
        for h_mults in h_candidates {
            if !vector_is_canonical(&h_mults, &h_ops) {
                continue;
            }
            let h_stab = stabilizer(&h_mults, &h_ops);
            let g_caps: Vec<u32> = slots(s, &g_mults, g_attach).iter().map(|&(_, c)| c).collect();
            let h_caps: Vec<u32> = slots(t, &h_mults, h_attach).iter().map(|&(_, c)| c).collect();
            for assignment in assignment_matrices(&g_caps, &h_caps) {
                if !matrix_is_canonical(&assignment, &g_stab, &h_stab) {
                    continue;
                }
                out.push(WiWjInstance {
                    s,
                    t,
                    g_mults: g_mults.clone(),
                    h_mults: h_mults.clone(),
                    g_attach,
                    h_attach,
                    assignment,
                });
            }
        }
    }
}

/// One disagreement or violation found by the census.
#[derive(Clone, Debug, serde::Serialize)]
pub struct WiWjViolation {
    pub kind: String,
    pub instance: String,
    pub graph: String,
}

/// Result of the bounded sweep.
#[derive(Clone, Debug, serde::Serialize)]
pub struct WiWjVerdict {
    pub instances: usize,
    pub distinct_bricks: usize,
    pub inapplicable_graphs: usize,
    pub wheel_like_bricks: usize,
    pub violations: Vec<WiWjViolation>,
}

impl WiWjVerdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn describe(inst: &WiWjInstance) -> String {
    format!(
        "s={} t={} attach={:?}/{:?} g_mults={:?} h_mults={:?} theta={:?}",
        inst.s, inst.t, inst.g_attach, inst.h_attach, inst.g_mults, inst.h_mults, inst.assignment
    )
}

/// Runs the full bounded census: groups instances by the canonical form of
/// the spliced graph, compares the closed-form predicate with brute-force
/// wheel-likeness on every instance, and checks that every wheel-like
/// instance is nonplanar.
pub fn wiwj_census(bounds: &WiWjBounds) -> WiWjVerdict {
    let instances = enumerate_instances(bounds);
    let built: Vec<(crate::iso::CanonicalForm, WiWjInstance, BuiltInstance)> = instances
        .into_par_iter()
        .map(|inst| {
            let b = inst.build();
            (canonical_form(&b.graph), inst, b)
        })
        .collect();
    let mut groups: BTreeMap<crate::iso::CanonicalForm, Vec<(WiWjInstance, BuiltInstance)>> =
        BTreeMap::new();
    let mut total = 0usize;
    for (form, inst, b) in built {
        total += 1;
        groups.entry(form).or_default().push((inst, b));
    }
    let results: Vec<(bool, bool, Vec<WiWjViolation>)> = groups
        .par_iter()
        .map(|(_, members)| {
            let graph = &members[0].1.graph;
            if !is_brick(graph) {
                return (false, false, Vec::new());
            }
            let wl = is_wheel_like(graph);
            let mut violations = Vec::new();
            if wl && is_planar(graph) {
                violations.push(WiWjViolation {
                    kind: "wheel-like splice of odd wheels is planar".into(),
                    instance: describe(&members[0].0),
                    graph: crate::io::emit_edge_list(graph),
                });
            }
            for (inst, built) in members {
                if closed_form(built) != wl {
                    violations.push(WiWjViolation {
                        kind: format!(
                            "closed-form predicate {} but brute force {}",
                            closed_form(built),
                            wl
                        ),
                        instance: describe(inst),
                        graph: crate::io::emit_edge_list(graph),
                    });
                }
            }
            (true, wl, violations)
        })
        .collect();
    let mut verdict = WiWjVerdict {
        instances: total,
        distinct_bricks: 0,
        inapplicable_graphs: 0,
        wheel_like_bricks: 0,
        violations: Vec::new(),
    };
    for (brick, wl, mut v) in results {
        if brick {
            verdict.distinct_bricks += 1;
            if wl {
                verdict.wheel_like_bricks += 1;
            }
        } else {
            verdict.inapplicable_graphs += 1;
        }
        verdict.violations.append(&mut v);
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;

    /// W5 spliced at its hub into a rim vertex of another W5 whose
    /// attachment spoke is forced to multiplicity 3. Rim-neighbor stubs at
    /// distance 2 or 3 on the host rim give the wheel-like family.
    fn hub_rim_w5(a: usize, b: usize) -> WiWjInstance {
        // Slots of the rim side: [prev=3, next=0, hub x3].
        let mut assignment = vec![vec![0u32; 3]; 5];
        assignment[a][0] = 1;
        assignment[b][1] = 1;
        for (i, row) in assignment.iter_mut().enumerate() {
            let used: u32 = row.iter().sum();
            row[2] = 1 - used.min(1);
            let _ = i;
        }
        WiWjInstance {
            s: 5,
            t: 5,
            g_mults: vec![1; 5],
            h_mults: vec![1, 1, 1, 1, 3],
            g_attach: Attach::Hub,
            h_attach: Attach::Rim,
            assignment,
        }
    }

    #[test]
    fn nonadjacent_attachments_are_wheel_like_and_nonplanar() {
        let inst = hub_rim_w5(0, 2);
        assert_eq!(inst.degree(), 5);
        let built = inst.build();
        assert_eq!(built.graph.n(), 10);
        assert!(is_brick(&built.graph));
        assert!(closed_form(&built));
        assert!(is_wheel_like(&built.graph));
        assert!(!is_planar(&built.graph));
        assert_eq!(wiwj_predicate(&inst), Ok(true));
    }

    #[test]
    fn adjacent_attachments_are_not_wheel_like() {
        let inst = hub_rim_w5(0, 1);
        let built = inst.build();
        assert!(is_brick(&built.graph));
        assert!(!closed_form(&built));
        assert!(!is_wheel_like(&built.graph));
    }

    #[test]
    fn equal_attachment_stub_is_not_a_brick() {
        // Both rim stubs on the same doubled spoke: {u, v_h} becomes a
        // 2-vertex cut, so the splice is not 3-connected.
        let mut assignment = vec![vec![0u32; 3]; 5];
        assignment[0][0] = 1;
        assignment[0][1] = 1;
        assignment[1][2] = 1;
        assignment[2][2] = 1;
        assignment[3][2] = 1;
        assignment[4][2] = 1;
        let inst = WiWjInstance {
            s: 5,
            t: 5,
            g_mults: vec![2, 1, 1, 1, 1],
            h_mults: vec![1, 1, 1, 1, 4],
            g_attach: Attach::Hub,
            h_attach: Attach::Rim,
            assignment,
        };
        assert_eq!(wiwj_predicate(&inst), Err(Inapplicable));
    }

    #[test]
    fn hub_hub_k4_splice_is_not_wheel_like() {
        let assignment = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ];
        let inst = WiWjInstance {
            s: 3,
            t: 3,
            g_mults: vec![1; 3],
            h_mults: vec![1; 3],
            g_attach: Attach::Hub,
            h_attach: Attach::Hub,
            assignment,
        };
        let built = inst.build();
        // K4 (hub) spliced with K4 (hub) is the prism.
        assert!(crate::iso::is_isomorphic(
            &built.graph,
            &crate::graph::named_graph(crate::graph::NamedGraph::C6Bar)
        ));
        assert_eq!(wiwj_predicate(&inst), Ok(false));
    }

    #[test]
    fn tripled_spoke_k4_redesignates_as_rim_attachment() {
        // W5 at its hub with K4 carrying one tripled spoke at its hub: the
        // K4 side re-reads as rim-attached, so the instance can be
        // wheel-like when the two simple-edge stubs are nonadjacent.
        let assignment = vec![
            // columns: K4 rim slots 0 (x3), 1, 2
            vec![1, 0, 0],
            vec![1, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ];
        let inst = WiWjInstance {
            s: 5,
            t: 3,
            g_mults: vec![1; 5],
            h_mults: vec![3, 1, 1],
            g_attach: Attach::Hub,
            h_attach: Attach::Hub,
            assignment,
        };
        let built = inst.build();
        assert!(is_brick(&built.graph));
        // Stubs of the two simple K4 spokes land on rim vertices 3 and 4,
        // which are adjacent: not wheel-like.
        assert!(!closed_form(&built));
        assert_eq!(is_wheel_like(&built.graph), false);
        // Move one of them to make the pair nonadjacent.
        let assignment = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![0, 0, 1],
            vec![1, 0, 0],
        ];
        let inst = WiWjInstance { assignment, ..inst };
        let built = inst.build();
        assert!(is_brick(&built.graph));
        assert!(closed_form(&built));
        assert!(is_wheel_like(&built.graph));
        assert!(!is_planar(&built.graph));
    }

    #[test]
    fn small_census_is_clean() {
        let verdict = wiwj_census(&WiWjBounds { max_wheel: 3, max_free_doubles: 1 });
        assert!(verdict.passed(), "{:?}", verdict.violations);
        assert!(verdict.instances > 0);
        assert_eq!(verdict.wheel_like_bricks, 0);
    }

    #[test]
    fn mult_vector_shapes() {
        assert_eq!(mult_vectors(3, 0, None), vec![vec![1, 1, 1]]);
        assert_eq!(mult_vectors(3, 1, None).len(), 4);
        let forced = mult_vectors(3, 1, Some(4));
        assert!(forced.iter().all(|v| v[2] == 4));
    }

    #[test]
    fn assignment_matrix_counts() {
        // Permutation matrices of order 3.
        assert_eq!(assignment_matrices(&[1, 1, 1], &[1, 1, 1]).len(), 6);
        // Row/col sums 2 on a 2x2 grid.
        assert_eq!(assignment_matrices(&[2, 2], &[2, 2]).len(), 3);
    }

    #[test]
    fn odd_wheel_hub_designations() {
        use crate::graph::{named_graph, odd_wheel, NamedGraph};
        assert_eq!(odd_wheel_hubs(&named_graph(NamedGraph::W5)), vec![5]);
        assert_eq!(odd_wheel_hubs(&named_graph(NamedGraph::K4)), vec![0, 1, 2, 3]);
        assert_eq!(odd_wheel_hubs(&named_graph(NamedGraph::C6Bar)), Vec::<usize>::new());
        let doubled = odd_wheel(5, Some(&[2, 1, 1, 1, 1])).unwrap();
        assert_eq!(odd_wheel_hubs(&doubled), vec![5]);
        let k4_tripled = odd_wheel(3, Some(&[3, 1, 1])).unwrap();
        assert_eq!(odd_wheel_hubs(&k4_tripled), vec![0, 3]);
    }
}
