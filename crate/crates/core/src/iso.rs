//! Canonical labeling for small multigraphs by iterated degree refinement
//! plus backtracking over the remaining symmetric cells. Adequate up to a
//! dozen or so vertices, which is all the census ever needs.

use crate::graph::{MultiGraph, Vertex};

/// A label-invariant encoding of a multigraph: the vertex count followed by
/// the upper triangle of the adjacency multiplicity matrix under the
/// canonical vertex order. Equal forms mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

struct Canonizer {
    n: usize,
    /// Multiplicity matrix, row-major.
    mult: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl Canonizer {
    fn code_for(&self, order: &[Vertex]) -> Vec<u8> {
        let mut code = Vec::with_capacity(1 + self.n * (self.n - 1) / 2);
        code.push(self.n as u8);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                code.push(self.mult[order[i] * self.n + order[j]]);
            }
        }
        code
    }

    /// Splits cells by (cell index, multiset of edge multiplicities into each
    /// current cell) until stable. `cells` is a list of vertex groups.
    fn refine(&self, cells: &mut Vec<Vec<Vertex>>) {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let k = cells.len();
            let mut split = false;
            let mut next: Vec<Vec<Vertex>> = Vec::with_capacity(k);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                // Signature: per target cell, total multiplicity into it.
                let mut sigs: Vec<(Vec<u32>, Vertex)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u32; k];
                        for w in 0..self.n {
                            let m = self.mult[v * self.n + w];
                            if m > 0 {
                                sig[cell_of[w]] += m as u32;
                            }
                        }
                        (sig, v)
                    })
                    .collect();
                sigs.sort();
                let mut group: Vec<Vertex> = vec![sigs[0].1];
                for pair in sigs.windows(2) {
                    if pair[0].0 == pair[1].0 {
                        group.push(pair[1].1);
                    } else {
                        next.push(std::mem::take(&mut group));
                        group = vec![pair[1].1];
                        split = true;
                    }
                }
                next.push(group);
            }
            *cells = next;
            if !split {
                return;
            }
        }
    }

    fn search(&mut self, mut cells: Vec<Vec<Vertex>>) {
        self.refine(&mut cells);
        if let Some(pos) = cells.iter().position(|c| c.len() > 1) {
            let branch = cells[pos].clone();
            for &v in &branch {
                let mut child = Vec::with_capacity(cells.len() + 1);
                for (ci, cell) in cells.iter().enumerate() {
                    if ci == pos {
                        child.push(vec![v]);
                        child.push(branch.iter().copied().filter(|&w| w != v).collect());
                    } else {
                        child.push(cell.clone());
                    }
                }
                self.search(child);
            }
        } else {
            let order: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
            let code = self.code_for(&order);
            match &self.best {
                Some(b) if *b <= code => {}
                _ => self.best = Some(code),
            }
        }
    }
}

/// Computes the canonical form of a multigraph.
pub fn canonical_form(g: &MultiGraph) -> CanonicalForm {
    let n = g.n();
    let mut mult = vec![0u8; n * n];
    for (_, u, v) in g.edges() {
        mult[u * n + v] = mult[u * n + v].saturating_add(1);
        mult[v * n + u] = mult[v * n + u].saturating_add(1);
    }
    let mut canon = Canonizer { n, mult, best: None };
    canon.search(vec![(0..n).collect()]);
    CanonicalForm(canon.best.expect("at least one labeling"))
}

pub fn is_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, odd_wheel, NamedGraph};

    #[test]
    fn relabelings_share_a_form() {
        let g = MultiGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let h = MultiGraph::new(5, &[(3, 2), (2, 0), (0, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn multiplicities_distinguish() {
        let single = odd_wheel(3, None).unwrap();
        let doubled = odd_wheel(3, Some(&[2, 1, 1])).unwrap();
        assert!(!is_isomorphic(&single, &doubled));
        let doubled_other = odd_wheel(3, Some(&[1, 2, 1])).unwrap();
        assert!(is_isomorphic(&doubled, &doubled_other));
    }

    #[test]
    fn prism_is_not_k33() {
        let prism = named_graph(NamedGraph::C6Bar);
        let mut k33_edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                k33_edges.push((a, b));
            }
        }
        let k33 = MultiGraph::new(6, &k33_edges).unwrap();
        assert!(!is_isomorphic(&prism, &k33));
    }

    #[test]
    fn symmetric_graphs_canonize() {
        let k8: Vec<(usize, usize)> = (0..8)
            .flat_map(|i| ((i + 1)..8).map(move |j| (i, j)))
            .collect();
        let g = MultiGraph::new(8, &k8).unwrap();
        let form = canonical_form(&g);
        assert_eq!(form.0.len(), 1 + 28);
        assert!(form.0[1..].iter().all(|&b| b == 1));
    }
}
