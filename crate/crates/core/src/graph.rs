//! Loopless undirected multigraphs with stable edge identities, plus the
//! structural constructions used everywhere else: contractions, edge cuts,
//! splicing, wheels and the small named graphs.

use crate::error::GraphError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

/// Stable identifier of an edge. Ids are dense `0..m` at construction time
/// and are never renumbered by deletions or contractions, so an edge keeps
/// its identity across derived graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of vertices of a host graph, backed by a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet(0);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Complement within a host graph on `n` vertices.
    pub fn complement(&self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn union(&self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(&self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set of edge ids, backed by a 128-bit mask (ids are capped at 128 per
/// graph, plenty for desk-scale censuses).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut s = EdgeSet(0);
        for e in iter {
            s.insert(e);
        }
        s
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.0 |= 1u128 << e.0;
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.0 &= !(1u128 << e.0);
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: EdgeSet) -> Self {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: EdgeSet) -> Self {
        EdgeSet(self.0 & other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros();
                bits &= bits - 1;
                Some(EdgeId(e))
            }
        })
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

const MAX_VERTICES: usize = 64;
const MAX_EDGES: usize = 128;

/// A finite loopless multigraph. Values are immutable after construction;
/// every operation returns a new graph. Edge ids of surviving edges are
/// preserved by deletion and contraction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    /// Indexed by edge id; `None` marks a retired id.
    slots: Vec<Option<[Vertex; 2]>>,
    live: usize,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph(n={}, edges=[", self.n)?;
        for (i, (_, u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl MultiGraph {
    /// Builds a graph on `n` vertices from an endpoint list. Edge ids are
    /// assigned densely in list order.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > MAX_VERTICES || edges.len() > MAX_EDGES {
            return Err(GraphError::TooLarge { n, m: edges.len() });
        }
        let mut slots = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            slots.push(Some([u, v]));
        }
        Ok(Self::from_slots(n, slots))
    }

    fn from_slots(n: usize, slots: Vec<Option<[Vertex; 2]>>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut live = 0;
        for (id, slot) in slots.iter().enumerate() {
            if let Some([u, v]) = *slot {
                adj[u].push((v, EdgeId(id as u32)));
                adj[v].push((u, EdgeId(id as u32)));
                live += 1;
            }
        }
        MultiGraph { n, slots, live, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of live edges.
    pub fn m(&self) -> usize {
        self.live
    }

    /// One past the largest edge id ever allocated in this graph's history.
    pub fn id_bound(&self) -> usize {
        self.slots.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<[Vertex; 2]> {
        self.slots.get(e.index()).copied().flatten()
    }

    pub fn has_edge_id(&self, e: EdgeId) -> bool {
        self. endpoints(e).is_some()
    }

    /// Live edges as `(id, u, v)` in id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Vertex, Vertex)> + '_ {
        self.slots.iter().enumerate().filter_map(|(i, s)| {
            s.map(|[u, v]| (EdgeId(i as u32), u, v))
        })
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().map(|(e, _, _)| e)
    }

    pub fn all_edge_set(&self) -> EdgeSet {
        EdgeSet::from_ids(self.edge_ids())
    }

    /// Incident `(neighbor, id)` pairs of `v`, in id order.
    pub fn edges_at(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    /// Edge-degree (counting multiplicity).
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Distinct neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for &(w, _) in &self.adj[v] {
            s.insert(w);
        }
        s
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }

    pub fn edges_between(&self, u: Vertex, v: Vertex) -> Vec<EdgeId> {
        self.adj[u]
            .iter()
            .filter(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbor masks indexed by vertex; handy for bitset traversals.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.n];
        for (_, u, v) in self.edges() {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    /// Groups of parallel edges (one entry per unordered vertex pair with
    /// multiplicity at least 2), sorted by endpoints.
    pub fn parallel_classes(&self) -> Vec<(Vertex, Vertex, Vec<EdgeId>)> {
        let mut by_pair: std::collections::BTreeMap<(Vertex, Vertex), Vec<EdgeId>> =
            std::collections::BTreeMap::new();
        for (e, u, v) in self.edges() {
            let key = (u.min(v), u.max(v));
            by_pair.entry(key).or_default().push(e);
        }
        by_pair
            .into_iter()
            .filter(|(_, ids)| ids.len() >= 2)
            .map(|((u, v), ids)| (u, v, ids))
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.parallel_classes().is_empty()
    }

    /// Contracts the shore `x` to a single new vertex. The new vertex is the
    /// last index of the result; the remaining vertices keep their relative
    /// order. Returns the result together with the old-to-new vertex map.
    /// Edges inside `x` are retired; all other edge ids are preserved.
    pub fn contract(&self, x: VertexSet) -> Result<(MultiGraph, Vec<Vertex>), GraphError> {
        let full = VertexSet::full(self.n);
        if x.is_empty() || !x.is_subset_of(full) || x == full {
            return Err(GraphError::BadShore);
        }
        let keep = x.complement(self.n);
        let new_n = keep.len() + 1;
        let contracted = new_n - 1;
        let mut vmap = vec![contracted; self.n];
        for (rank, v) in keep.iter().enumerate() {
            vmap[v] = rank;
        }
        let mut slots = vec![None; self.slots.len()];
        for (e, u, v) in self.edges() {
            let inside_u = x.contains(u);
            let inside_v = x.contains(v);
            if inside_u && inside_v {
                continue;
            }
            slots[e.index()] = Some([vmap[u], vmap[v]]);
        }
        Ok((Self::from_slots(new_n, slots), vmap))
    }

    /// The edge cut `∂(x)`: all edges with exactly one end in `x`.
    pub fn edge_cut(&self, x: VertexSet) -> Result<EdgeSet, GraphError> {
        let full = VertexSet::full(self.n);
        if x.is_empty() || !x.is_subset_of(full) || x == full {
            return Err(GraphError::BadShore);
        }
        let mut cut = EdgeSet::EMPTY;
        for (e, u, v) in self.edges() {
            if x.contains(u) != x.contains(v) {
                cut.insert(e);
            }
        }
        Ok(cut)
    }

    /// Deletes the given edges; ids of survivors are unchanged.
    pub fn delete_edges(&self, ids: &[EdgeId]) -> Result<MultiGraph, GraphError> {
        let mut slots = self.slots.clone();
        for &e in ids {
            if e.index() >= slots.len() || slots[e.index()].is_none() {
                return Err(GraphError::UnknownEdge(e.0));
            }
            slots[e.index()] = None;
        }
        Ok(Self::from_slots(self.n, slots))
    }

    /// Deletes vertices (and all incident edges), relabeling the survivors in
    /// order. Used by the matching machinery.
    pub fn delete_vertices(&self, s: VertexSet) -> MultiGraph {
        let keep = s.complement(self.n);
        let mut vmap = vec![usize::MAX; self.n];
        for (rank, v) in keep.iter().enumerate() {
            vmap[v] = rank;
        }
        let mut slots = vec![None; self.slots.len()];
        for (e, u, v) in self.edges() {
            if keep.contains(u) && keep.contains(v) {
                slots[e.index()] = Some([vmap[u], vmap[v]]);
            }
        }
        let n = keep.len().max(1);
        Self::from_slots(n, slots)
    }

    /// Adds a fresh parallel copy of an existing edge. The copy receives the
    /// next unused id.
    pub fn add_parallel(&self, e: EdgeId) -> Result<MultiGraph, GraphError> {
        let [u, v] = self.endpoints(e).ok_or(GraphError::UnknownEdge(e.0))?;
        if self.slots.len() >= MAX_EDGES {
            return Err(GraphError::TooLarge { n: self.n, m: self.slots.len() + 1 });
        }
        let mut slots = self.slots.clone();
        slots.push(Some([u, v]));
        Ok(Self::from_slots(self.n, slots))
    }

    /// The underlying simple graph: one edge per adjacent vertex pair, with
    /// fresh dense ids.
    pub fn underlying_simple(&self) -> MultiGraph {
        let mut pairs: Vec<(Vertex, Vertex)> = self
            .edges()
            .map(|(_, u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort();
        pairs.dedup();
        MultiGraph::new(self.n, &pairs).expect("simplification preserves validity")
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks(0).len() <= 1
    }

    /// Connected components of the graph with `removed` vertices deleted,
    /// as vertex masks.
    pub fn component_masks(&self, removed: u64) -> Vec<u64> {
        let masks = self.adjacency_masks();
        let alive = VertexSet::full(self.n).0 & !removed;
        let mut unseen = alive;
        let mut comps = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut frontier = 0u64;
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    frontier |= masks[v];
                }
                let grown = (comp | frontier) & alive;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            comps.push(comp);
            unseen &= !comp;
        }
        comps
    }

    /// Two-colors the graph. Returns the color classes, or an odd cycle as
    /// a vertex sequence when the graph is not bipartite.
    pub fn bipartition(&self) -> Result<(VertexSet, VertexSet), Vec<Vertex>> {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        parent[w] = u;
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return Err(odd_cycle(&parent, u, w));
                    }
                }
            }
        }
        let mut a = VertexSet::EMPTY;
        let mut b = VertexSet::EMPTY;
        for (v, &c) in color.iter().enumerate() {
            if c == 1 {
                b.insert(v);
            } else {
                a.insert(v);
            }
        }
        Ok((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Exhaustive 3-connectivity check by single and pairwise vertex
    /// deletion.
    pub fn is_three_connected(&self) -> bool {
        if self.n < 4 || !self.is_connected() {
            return false;
        }
        for u in 0..self.n {
            if self.component_masks(1 << u).len() > 1 {
                return false;
            }
            for v in (u + 1)..self.n {
                if self.component_masks((1 << u) | (1 << v)).len() > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Splices `self` at `map.u` with `other` at `map.v` along the stub
    /// bijection in `map`. The result keeps `self − u` first (vertex order
    /// preserved) followed by `other − v`; edge ids are freshly assigned:
    /// surviving `self` edges in id order, then surviving `other` edges,
    /// then one joining edge per bijection pair in `map.pairs` order.
    pub fn splice(&self, other: &MultiGraph, map: &SpliceMap) -> Result<Splice, GraphError> {
        let (u, v) = (map.u, map.v);
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= other.n {
            return Err(GraphError::VertexOutOfRange(v, other.n));
        }
        let du = self.degree(u);
        let dv = other.degree(v);
        if du != dv {
            return Err(GraphError::SpliceDegreeMismatch { du, dv });
        }
        let star_g: Vec<EdgeId> = self.adj[u].iter().map(|&(_, e)| e).collect();
        let star_h: Vec<EdgeId> = other.adj[v].iter().map(|&(_, e)| e).collect();
        if map.pairs.len() != du {
            return Err(GraphError::SpliceMapNotBijective);
        }
        let mut seen_g = std::collections::BTreeSet::new();
        let mut seen_h = std::collections::BTreeSet::new();
        for &(eg, eh) in &map.pairs {
            if !star_g.contains(&eg) || !star_h.contains(&eh) {
                return Err(GraphError::SpliceMapNotBijective);
            }
            if !seen_g.insert(eg) || !seen_h.insert(eh) {
                return Err(GraphError::SpliceMapNotBijective);
            }
        }

        let n_new = self.n + other.n - 2;
        // Vertex maps into the spliced graph.
        let mut vmap_g = vec![None; self.n];
        let mut next = 0;
        for w in 0..self.n {
            if w != u {
                vmap_g[w] = Some(next);
                next += 1;
            }
        }
        let mut vmap_h = vec![None; other.n];
        for w in 0..other.n {
            if w != v {
                vmap_h[w] = Some(next);
                next += 1;
            }
        }

        let mut endpoints = Vec::new();
        let mut from_g = vec![None; self.slots.len()];
        let mut from_h = vec![None; other.slots.len()];
        for (e, a, b) in self.edges() {
            if a == u || b == u {
                continue;
            }
            from_g[e.index()] = Some(EdgeId(endpoints.len() as u32));
            endpoints.push((vmap_g[a].unwrap(), vmap_g[b].unwrap()));
        }
        for (e, a, b) in other.edges() {
            if a == v || b == v {
                continue;
            }
            from_h[e.index()] = Some(EdgeId(endpoints.len() as u32));
            endpoints.push((vmap_h[a].unwrap(), vmap_h[b].unwrap()));
        }
        let mut joins = Vec::new();
        for &(eg, eh) in &map.pairs {
            let [ga, gb] = self.endpoints(eg).unwrap();
            let g_stub = if ga == u { gb } else { ga };
            let [ha, hb] = other.endpoints(eh).unwrap();
            let h_stub = if ha == v { hb } else { ha };
            let id = EdgeId(endpoints.len() as u32);
            joins.push(id);
            from_g[eg.index()] = Some(id);
            from_h[eh.index()] = Some(id);
            endpoints.push((vmap_g[g_stub].unwrap(), vmap_h[h_stub].unwrap()));
        }
        let graph = MultiGraph::new(n_new, &endpoints)?;
        let mut g_shore = VertexSet::EMPTY;
        for w in 0..self.n {
            if let Some(nv) = vmap_g[w] {
                g_shore.insert(nv);
            }
        }
        Ok(Splice { graph, vmap_g, vmap_h, from_g, from_h, joins, g_shore })
    }
}

fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<Vertex> {
    // Walk both BFS ancestries up to their meeting point.
    let mut pu = vec![u];
    let mut x = u;
    while parent[x] != usize::MAX {
        x = parent[x];
        pu.push(x);
    }
    let mut pw = vec![w];
    let mut y = w;
    while parent[y] != usize::MAX {
        y = parent[y];
        pw.push(y);
    }
    let on_pu: std::collections::HashSet<usize> = pu.iter().copied().collect();
    let meet_idx = pw.iter().position(|v| on_pu.contains(v)).unwrap();
    let meet = pw[meet_idx];
    let mut cycle: Vec<usize> = pu.iter().take_while(|&&v| v != meet).copied().collect();
    cycle.push(meet);
    for &v in pw[..meet_idx].iter().rev() {
        cycle.push(v);
    }
    cycle
}

/// The data of a splice: vertex `u` of the first graph, `v` of the second,
/// and a bijection between their edge stars as `(g_edge, h_edge)` pairs.
#[derive(Clone, Debug)]
pub struct SpliceMap {
    pub u: Vertex,
    pub v: Vertex,
    pub pairs: Vec<(EdgeId, EdgeId)>,
}

impl SpliceMap {
    /// The identity-ish map pairing the two stars in id order.
    pub fn in_order(g: &MultiGraph, u: Vertex, h: &MultiGraph, v: Vertex) -> Self {
        let pairs = g.edges_at(u)
            .iter()
            .zip(h.edges_at(v))
            .map(|(&(_, eg), &(_, eh))| (eg, eh))
            .collect();
        SpliceMap { u, v, pairs }
    }
}

/// Result of a splice, with enough bookkeeping to track edges and shores
/// across the construction.
#[derive(Clone, Debug)]
pub struct Splice {
    pub graph: MultiGraph,
    /// Old vertex of the first operand -> new vertex (`None` for `u`).
    pub vmap_g: Vec<Option<Vertex>>,
    pub vmap_h: Vec<Option<Vertex>>,
    /// Old edge id of the first operand -> new edge id. Star edges map to
    /// the joining edge they became part of.
    pub from_g: Vec<Option<EdgeId>>,
    pub from_h: Vec<Option<EdgeId>>,
    /// Ids of the joining edges, in bijection-pair order.
    pub joins: Vec<EdgeId>,
    /// Image of `V(G) − u` in the spliced graph: one shore of the splice cut.
    pub g_shore: VertexSet,
}

/// The odd wheel on a rim of length `k` (`k` odd, `k >= 3`) plus a hub.
/// Rim vertices are `0..k` in cycle order, the hub is vertex `k`. Spokes
/// carry the requested multiplicities (all 1 when absent); spoke copies are
/// grouped per rim vertex, after the rim edges.
pub fn odd_wheel(k: usize, multiplicities: Option<&[u32]>) -> Result<MultiGraph, GraphError> {
    if k < 3 || k % 2 == 0 {
        return Err(GraphError::BadWheelSize(k));
    }
    let mults: Vec<u32> = match multiplicities {
        Some(m) => {
            if m.len() != k || m.iter().any(|&x| x == 0) {
                return Err(GraphError::BadMultiplicity);
            }
            m.to_vec()
        }
        None => vec![1; k],
    };
    let hub = k;
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
    }
    for (i, &m) in mults.iter().enumerate() {
        for _ in 0..m {
            edges.push((i, hub));
        }
    }
    MultiGraph::new(k + 1, &edges)
}

/// The catalog of fixed graphs used throughout the test suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedGraph {
    K4,
    C6Bar,
    R8,
    W5,
    W7,
}

impl std::str::FromStr for NamedGraph {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k4" => Ok(NamedGraph::K4),
            "c6bar" => Ok(NamedGraph::C6Bar),
            "r8" => Ok(NamedGraph::R8),
            "w5" => Ok(NamedGraph::W5),
            "w7" => Ok(NamedGraph::W7),
            other => Err(format!("unknown graph name `{other}`")),
        }
    }
}

/// Builds a named graph with its frozen labeling.
///
/// - `k4`, `w5`, `w7`: odd wheels via [`odd_wheel`] (hub is the last vertex).
/// - `c6bar`: complement of the 6-cycle `0-1-2-3-4-5-0`; comes out as the
///   triangular prism on triangles `{0,2,4}`, `{1,3,5}` with rungs
///   `0-3`, `1-4`, `2-5`.
/// - `r8`: the cubic Halin graph on 8 vertices — internal path `0-1-2`
///   with leaves `3,4` at `0`, `5` at `1`, `6,7` at `2`, and the outer
///   cycle `3-4-5-6-7-3`. This is the unique 8-vertex near-bipartite brick
///   without two nonadjacent removable edges, which the census unit tests
///   re-derive from scratch.
pub fn named_graph(name: NamedGraph) -> MultiGraph {
    match name {
        NamedGraph::K4 => odd_wheel(3, None).unwrap(),
        NamedGraph::W5 => odd_wheel(5, None).unwrap(),
        NamedGraph::W7 => odd_wheel(7, None).unwrap(),
        NamedGraph::C6Bar => {
            let mut edges = Vec::new();
            for i in 0..6usize {
                for j in (i + 1)..6 {
                    let d = (j - i).min(6 - (j - i));
                    if d >= 2 {
                        edges.push((i, j));
                    }
                }
            }
            MultiGraph::new(6, &edges).unwrap()
        }
        NamedGraph::R8 => {
            let edges = [
                (0, 1),
                (1, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 3),
            ];
            MultiGraph::new(8, &edges).unwrap()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert_eq!(MultiGraph::new(3, &[(0, 0)]), Err(GraphError::LoopEdge(0)));
        assert_eq!(
            MultiGraph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
        assert_eq!(MultiGraph::new(0, &[]), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn contract_single_rim_vertex_of_w5_is_a_rename() {
        let w5 = named_graph(NamedGraph::W5);
        let (g, vmap) = w5.contract(VertexSet::singleton(0)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 10);
        assert_eq!(vmap[0], 5);
        assert_eq!(vmap[1], 0);
    }

    #[test]
    fn contract_two_vertices_of_k4() {
        let k4 = named_graph(NamedGraph::K4);
        let x = VertexSet::from_iter([0, 1]);
        let (g, _) = k4.contract(x).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 5);
        // Each far vertex now sees the contracted one twice.
        assert_eq!(g.parallel_classes().len(), 2);
    }

    #[test]
    fn contract_counts() {
        let c6bar = named_graph(NamedGraph::C6Bar);
        let x = VertexSet::from_iter([0, 2, 4]);
        let internal = c6bar
            .edges()
            .filter(|&(_, u, v)| x.contains(u) && x.contains(v))
            .count();
        let (g, _) = c6bar.contract(x).unwrap();
        assert_eq!(g.n(), c6bar.n() - x.len() + 1);
        assert_eq!(g.m(), c6bar.m() - internal);
    }

    #[test]
    fn contract_rejects_empty_and_full_shores() {
        let k4 = named_graph(NamedGraph::K4);
        assert!(k4.contract(VertexSet::EMPTY).is_err());
        assert!(k4.contract(VertexSet::full(4)).is_err());
    }

    #[test]
    fn edge_cut_of_vertex_is_its_star() {
        let k4 = named_graph(NamedGraph::K4);
        let cut = k4.edge_cut(VertexSet::singleton(2)).unwrap();
        assert_eq!(cut.len(), 3);
        let w5 = named_graph(NamedGraph::W5);
        let rim = VertexSet::from_iter(0..5);
        let spokes = w5.edge_cut(rim).unwrap();
        assert_eq!(spokes.len(), 5);
        for e in spokes.iter() {
            let [u, v] = w5.endpoints(e).unwrap();
            assert!(u == 5 || v == 5);
        }
    }

    #[test]
    fn deletion_keeps_ids_stable() {
        let k4 = named_graph(NamedGraph::K4);
        let ids: Vec<EdgeId> = k4.edge_ids().collect();
        let g = k4.delete_edges(&[ids[1], ids[3]]).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.endpoints(ids[1]), None);
        assert_eq!(g.endpoints(ids[0]), k4.endpoints(ids[0]));
        assert_eq!(g.endpoints(ids[5]), k4.endpoints(ids[5]));
        assert!(g.delete_edges(&[ids[1]]).is_err());
    }

    #[test]
    fn odd_wheel_shapes() {
        assert!(odd_wheel(4, None).is_err());
        assert!(odd_wheel(1, None).is_err());
        let w5 = odd_wheel(5, None).unwrap();
        assert_eq!((w5.n(), w5.m()), (6, 10));
        assert_eq!(w5.degree(5), 5);
        for v in 0..5 {
            assert_eq!(w5.degree(v), 3);
        }
        let doubled = odd_wheel(5, Some(&[2, 1, 1, 1, 1])).unwrap();
        assert_eq!(doubled.m(), 11);
        let classes = doubled.parallel_classes();
        assert_eq!(classes.len(), 1);
        assert_eq!((classes[0].0, classes[0].1), (0, 5));
    }

    #[test]
    fn named_graph_shapes() {
        let k4 = named_graph(NamedGraph::K4);
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let c6bar = named_graph(NamedGraph::C6Bar);
        assert_eq!((c6bar.n(), c6bar.m()), (6, 9));
        for v in 0..6 {
            assert_eq!(c6bar.degree(v), 3);
        }
        let r8 = named_graph(NamedGraph::R8);
        assert_eq!((r8.n(), r8.m()), (8, 12));
        assert!((0..8).all(|v| r8.degree(v) == 3));
        assert!(r8.is_three_connected());
    }

    #[test]
    fn underlying_simple_of_doubled_wheel() {
        let doubled = odd_wheel(5, Some(&[2, 1, 1, 1, 1])).unwrap();
        let simple = doubled.underlying_simple();
        assert_eq!((simple.n(), simple.m()), (6, 10));
        assert!(simple.is_simple());
    }

    #[test]
    fn bipartition_of_cycles() {
        let c6 = MultiGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let (a, b) = c6.bipartition().unwrap();
        assert_eq!(a, VertexSet::from_iter([0, 2, 4]));
        assert_eq!(b, VertexSet::from_iter([1, 3, 5]));
        let c5 = MultiGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let cycle = c5.bipartition().unwrap_err();
        assert_eq!(cycle.len() % 2, 1);
        // Witness really is a closed odd walk in the graph.
        for i in 0..cycle.len() {
            assert!(c5.adjacent(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn three_connectivity() {
        assert!(named_graph(NamedGraph::K4).is_three_connected());
        assert!(named_graph(NamedGraph::W5).is_three_connected());
        assert!(named_graph(NamedGraph::C6Bar).is_three_connected());
        let c6 = MultiGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(!c6.is_three_connected());
    }

    #[test]
    fn splice_counts_and_errors() {
        let k4 = named_graph(NamedGraph::K4);
        let w5 = named_graph(NamedGraph::W5);
        let map = SpliceMap::in_order(&k4, 0, &w5, 5);
        assert_eq!(
            k4.splice(&w5, &map).unwrap_err(),
            GraphError::SpliceDegreeMismatch { du: 3, dv: 5 }
        );
        let map = SpliceMap::in_order(&k4, 0, &k4, 0);
        let spliced = k4.splice(&k4, &map).unwrap();
        assert_eq!(spliced.graph.n(), 4 + 4 - 2);
        assert_eq!(spliced.graph.m(), 6 + 6 - 3);
        for v in 0..6 {
            assert_eq!(spliced.graph.degree(v), 3);
        }
    }

    #[test]
    fn splice_rejects_non_bijections() {
        let k4 = named_graph(NamedGraph::K4);
        let star: Vec<EdgeId> = k4.edges_at(0).iter().map(|&(_, e)| e).collect();
        let bad = SpliceMap {
            u: 0,
            v: 0,
            pairs: vec![(star[0], star[0]), (star[1], star[0]), (star[2], star[1])],
        };
        assert_eq!(
            k4.splice(&k4, &bad).unwrap_err(),
            GraphError::SpliceMapNotBijective
        );
    }
}
