//! Vertex-weighted oriented graphs.
//!
//! Vertices are labeled `1..=n` and correspond to the variables `x_1..x_n`.
//! An edge `(u, v)` is oriented `u -> v`. Loops and anti-parallel pairs are
//! rejected, every weight is a positive integer, and sources (vertices with
//! no incoming edge, isolated vertices included) always carry weight 1. A
//! source weight stated otherwise is overridden and the override is recorded
//! in [`WeightedOrientedGraph::notes`].

mod family;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use family::{complete_natural, cycle, family, path, rooted_tree, star_center_sink};
pub use family::{FamilyKind, FamilyParams, Orientation};

#[derive(Debug, Clone, Eq)]
pub struct WeightedOrientedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    weights: Vec<u32>,
    notes: Vec<String>,
}

/// Incidence flags of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexRole {
    pub is_source: bool,
    pub is_sink: bool,
    pub is_leaf: bool,
    pub is_trivial: bool,
}

/// An induced subgraph together with the label map back into its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: WeightedOrientedGraph,
    /// `labels[k - 1]` is the parent label of subgraph vertex `k`.
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    /// Parent label of subgraph vertex `v`.
    pub fn parent_label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }
}

impl PartialEq for WeightedOrientedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.weights == other.weights
    }
}

impl WeightedOrientedGraph {
    /// Builds a graph on `n` vertices.
    ///
    /// Unlisted weights default to 1, repeated edges are merged, and source
    /// weights are normalized to 1 with a note.
    pub fn new(n: usize, edges: &[(usize, usize)], weights: &[(usize, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let check = |v: usize| {
            if (1..=n).contains(&v) {
                Ok(())
            } else {
                Err(Error::VertexOutOfRange { vertex: v, n })
            }
        };
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            check(u)?;
            check(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if set.contains(&(v, u)) {
                return Err(Error::AntiParallel(u, v));
            }
            set.insert((u, v));
        }
        let mut w = vec![1u32; n];
        for &(v, weight) in weights {
            check(v)?;
            if weight == 0 {
                return Err(Error::NonPositiveWeight(v));
            }
            w[v - 1] = weight;
        }
        let mut has_in = vec![false; n];
        for &(_, v) in &set {
            has_in[v - 1] = true;
        }
        let mut notes = Vec::new();
        for v in 1..=n {
            if !has_in[v - 1] && w[v - 1] != 1 {
                notes.push(format!(
                    "vertex {v} is a source; weight {} normalized to 1",
                    w[v - 1]
                ));
                w[v - 1] = 1;
            }
        }
        Ok(Self {
            n,
            edges: set,
            weights: w,
            notes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Oriented edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    /// True when `u` and `v` are joined in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v - 1]
    }

    /// Weights `w_1..w_n` in vertex order.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().map(|&w| u64::from(w)).sum()
    }

    /// Normalization notes recorded at construction time.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.1 == v)
            .map(|e| e.0)
            .collect()
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.0 == v)
            .map(|e| e.1)
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    pub fn role(&self, v: usize) -> VertexRole {
        let ins = self.edges.iter().filter(|e| e.1 == v).count();
        let outs = self.edges.iter().filter(|e| e.0 == v).count();
        VertexRole {
            is_source: ins == 0,
            is_sink: outs == 0 && ins >= 1,
            is_leaf: ins + outs == 1,
            is_trivial: self.weight(v) == 1,
        }
    }

    /// Roles of all vertices; entry `v - 1` belongs to vertex `v`.
    pub fn roles(&self) -> Vec<VertexRole> {
        (1..=self.n).map(|v| self.role(v)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.role(v).is_source).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.role(v).is_sink).collect()
    }

    /// Subgraph induced on `subset`, relabeled `1..=|subset|` in increasing
    /// parent order. Source normalization is applied again, since a vertex
    /// may lose all of its in-edges.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<InducedSubgraph> {
        let labels: Vec<usize> = subset
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if labels.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &v in &labels {
            if !(1..=self.n).contains(&v) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let mut new_label = vec![0usize; self.n + 1];
        for (k, &v) in labels.iter().enumerate() {
            new_label[v] = k + 1;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_label[u] != 0 && new_label[v] != 0)
            .map(|&(u, v)| (new_label[u], new_label[v]))
            .collect();
        let weights: Vec<_> = labels
            .iter()
            .enumerate()
            .map(|(k, &v)| (k + 1, self.weight(v)))
            .collect();
        let graph = Self::new(labels.len(), &edges, &weights)?;
        Ok(InducedSubgraph { graph, labels })
    }

    /// Deletes one vertex. `None` when it is the only vertex.
    pub fn delete_vertex(&self, v: usize) -> Result<Option<InducedSubgraph>> {
        if !(1..=self.n).contains(&v) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let rest: Vec<usize> = (1..=self.n).filter(|&u| u != v).collect();
        if rest.is_empty() {
            return Ok(None);
        }
        self.induced_subgraph(&rest).map(Some)
    }

    /// Same orientation and weights, except `w_v` drops by one.
    pub fn weight_reduce(&self, v: usize) -> Result<Self> {
        if !(1..=self.n).contains(&v) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if self.weight(v) < 2 {
            return Err(Error::TrivialWeight(v));
        }
        let mut out = self.clone();
        out.weights[v - 1] -= 1;
        out.notes.clear();
        Ok(out)
    }

    /// Every vertex has an in-neighbor of weight at least 2.
    pub fn has_full_pdim_structure(&self) -> bool {
        (1..=self.n).all(|v| {
            self.edges
                .iter()
                .any(|&(u, t)| t == v && self.weight(u) >= 2)
        })
    }

    /// Every pair of vertices is joined by exactly one edge.
    pub fn is_tournament(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// For a transitive tournament, the vertex order in which every edge
    /// points forward.
    pub fn transitive_order(&self) -> Option<Vec<usize>> {
        if !self.is_tournament() {
            return None;
        }
        let mut order: Vec<usize> = (1..=self.n).collect();
        order.sort_by_key(|&v| self.in_neighbors(v).len());
        let pos = positions(&order, self.n);
        self.edges
            .iter()
            .all(|&(u, v)| pos[u] < pos[v])
            .then_some(order)
    }

    /// Root of a rooted graph: the unique source, from which every vertex is
    /// reachable along consistently oriented paths.
    pub fn root(&self) -> Option<usize> {
        let sources = self.sources();
        if sources.len() != 1 {
            return None;
        }
        let root = sources[0];
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            for v in self.out_neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        (1..=self.n).all(|v| seen[v]).then_some(root)
    }

    /// Center of a star whose center is a sink: one vertex receiving an edge
    /// from every other vertex and no further edges.
    pub fn star_center_sink(&self) -> Option<usize> {
        if self.n < 2 || self.edges.len() != self.n - 1 {
            return None;
        }
        (1..=self.n).find(|&c| self.in_neighbors(c).len() == self.n - 1)
    }

    /// Vertex order `v_1 -> v_2 -> ... -> v_n -> v_1` of a naturally
    /// oriented cycle through all vertices (`n >= 3`).
    pub fn natural_cycle_order(&self) -> Option<Vec<usize>> {
        if self.n < 3 || self.edges.len() != self.n {
            return None;
        }
        if (1..=self.n).any(|v| self.in_neighbors(v).len() != 1 || self.out_neighbors(v).len() != 1)
        {
            return None;
        }
        let order = self.walk_from(1);
        (order.len() == self.n).then_some(order)
    }

    /// Vertex order `v_1 -> ... -> v_n` of a naturally oriented path through
    /// all vertices.
    pub fn natural_path_order(&self) -> Option<Vec<usize>> {
        if self.edges.len() + 1 != self.n {
            return None;
        }
        if (1..=self.n).any(|v| self.in_neighbors(v).len() > 1 || self.out_neighbors(v).len() > 1) {
            return None;
        }
        let sources = self.sources();
        if sources.len() != 1 {
            return None;
        }
        let order = self.walk_from(sources[0]);
        (order.len() == self.n).then_some(order)
    }

    fn walk_from(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut cur = start;
        while let Some(&next) = self.out_neighbors(cur).first() {
            if next == start || order.len() > self.n {
                break;
            }
            order.push(next);
            cur = next;
        }
        order
    }

    /// Applies a relabeling: vertex `v` becomes `order.position(v) + 1`.
    pub fn relabel(&self, order: &[usize]) -> Result<Self> {
        let pos = positions(order, self.n);
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (pos[u] + 1, pos[v] + 1))
            .collect();
        let weights: Vec<_> = (1..=self.n).map(|v| (pos[v] + 1, self.weight(v))).collect();
        Self::new(self.n, &edges, &weights)
    }
}

fn positions(order: &[usize], n: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n + 1];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    pos
}

impl fmt::Display for WeightedOrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=", self.n)?;
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}>{v}")).collect();
        write!(f, "[{}] w=(", edges.join(","))?;
        let w: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        write!(f, "{})", w.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sample_graph() -> WeightedOrientedGraph {
        WeightedOrientedGraph::new(5, &[(2, 1), (3, 2), (4, 3), (4, 5)], &[(2, 3), (3, 2)]).unwrap()
    }

    #[test]
    fn defaults_and_errors() {
        let g = WeightedOrientedGraph::new(2, &[(1, 2)], &[(2, 1)]).unwrap();
        assert_eq!(g.weights(), &[1, 1]);
        assert!(g.notes().is_empty());
        assert_eq!(
            WeightedOrientedGraph::new(2, &[(1, 1)], &[]),
            Err(Error::Loop(1))
        );
        assert_eq!(
            WeightedOrientedGraph::new(2, &[(1, 2), (2, 1)], &[]),
            Err(Error::AntiParallel(2, 1))
        );
        assert_eq!(
            WeightedOrientedGraph::new(2, &[(1, 2)], &[(2, 0)]),
            Err(Error::NonPositiveWeight(2))
        );
        assert_eq!(
            WeightedOrientedGraph::new(2, &[(1, 3)], &[]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert_eq!(
            WeightedOrientedGraph::new(0, &[], &[]),
            Err(Error::NoVertices)
        );
        let dup = WeightedOrientedGraph::new(2, &[(1, 2), (1, 2)], &[]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn source_weight_is_normalized_with_note() {
        let g = WeightedOrientedGraph::new(3, &[(1, 2)], &[(1, 5)]).unwrap();
        assert_eq!(g.weight(1), 1);
        assert_eq!(g.notes().len(), 1);
        assert!(g.notes()[0].contains("vertex 1"));
    }

    #[test]
    fn roles_of_sample_graph() {
        let d = sample_graph();
        let r = d.roles();
        assert!(r[3].is_source);
        assert!(r[0].is_sink && r[4].is_sink);
        assert!(r[0].is_leaf && r[4].is_leaf);
        assert!(!r[1].is_leaf && !r[2].is_leaf && !r[3].is_leaf);
        assert_eq!(d.sources(), vec![4]);
        assert_eq!(d.sinks(), vec![1, 5]);
    }

    #[test]
    fn roles_of_small_families() {
        let p = path(&[1, 1, 1], &Orientation::Natural).unwrap();
        let r = p.roles();
        assert!(r[0].is_source && r[0].is_leaf);
        assert!(r[2].is_sink && r[2].is_leaf);
        assert!(!r[1].is_leaf);
        let k = complete_natural(&[1, 1, 1]).unwrap();
        assert_eq!(k.sources(), vec![1]);
        assert_eq!(k.sinks(), vec![3]);
        assert!(k.roles().iter().all(|r| !r.is_leaf));
    }

    #[test]
    fn isolated_vertex_is_a_source() {
        let g = WeightedOrientedGraph::new(3, &[(1, 2)], &[(3, 4)]).unwrap();
        let r = g.role(3);
        assert!(r.is_source && !r.is_sink && r.is_trivial);
        assert_eq!(g.weight(3), 1);
    }

    #[test]
    fn induced_subgraph_renormalizes() {
        let c = cycle(&[2, 2, 2], &Orientation::Natural).unwrap();
        let sub = c.induced_subgraph(&[1, 2]).unwrap();
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(sub.graph.weights(), &[1, 2]);
        assert_eq!(sub.labels, vec![1, 2]);
        assert_eq!(c.induced_subgraph(&[]), Err(Error::EmptySubset));
        let full = c.induced_subgraph(&[3, 1, 2]).unwrap();
        assert_eq!(full.graph, c);
    }

    #[test]
    fn deleting_a_vertex_relabels() {
        let d = sample_graph();
        let sub = d.delete_vertex(1).unwrap().unwrap();
        assert_eq!(sub.labels, vec![2, 3, 4, 5]);
        assert_eq!(
            sub.graph.edges().collect::<Vec<_>>(),
            vec![(2, 1), (3, 2), (3, 4)]
        );
        assert_eq!(sub.graph.weights(), &[3, 2, 1, 1]);
        let single = WeightedOrientedGraph::new(1, &[], &[]).unwrap();
        assert_eq!(single.delete_vertex(1).unwrap(), None);
    }

    #[test]
    fn weight_reduction() {
        let g = WeightedOrientedGraph::new(2, &[(1, 2)], &[(2, 3)]).unwrap();
        assert_eq!(g.weight_reduce(2).unwrap().weight(2), 2);
        assert_eq!(g.weight_reduce(1), Err(Error::TrivialWeight(1)));
    }

    #[test]
    fn full_pdim_structure() {
        assert!(cycle(&[2, 2, 2], &Orientation::Natural)
            .unwrap()
            .has_full_pdim_structure());
        assert!(!cycle(&[1, 2, 2], &Orientation::Natural)
            .unwrap()
            .has_full_pdim_structure());
        assert!(!sample_graph().has_full_pdim_structure());
    }

    #[test]
    fn structure_detection() {
        let k = complete_natural(&[1, 2, 3, 1]).unwrap();
        assert_eq!(k.transitive_order(), Some(vec![1, 2, 3, 4]));
        let relabeled = k.relabel(&[3, 1, 4, 2]).unwrap();
        let order = relabeled.transitive_order().unwrap();
        assert_eq!(relabeled.relabel(&order).unwrap(), k);
        let c = cycle(&[2, 2, 2, 2], &Orientation::Natural).unwrap();
        assert_eq!(c.transitive_order(), None);
        assert_eq!(c.natural_cycle_order(), Some(vec![1, 2, 3, 4]));
        let p = path(&[1, 2, 3], &Orientation::Natural).unwrap();
        assert_eq!(p.natural_path_order(), Some(vec![1, 2, 3]));
        assert_eq!(p.root(), Some(1));
        let s = star_center_sink(&[1, 1, 1, 2]).unwrap();
        assert_eq!(s.star_center_sink(), Some(4));
        assert_eq!(sample_graph().root(), Some(4));
        assert_eq!(
            cycle(&[2, 2, 2], &Orientation::Natural).unwrap().root(),
            None
        );
        let bent = path(&[1, 2, 1], &Orientation::PerEdge(vec![true, false])).unwrap();
        assert_eq!(bent.natural_path_order(), None);
    }
}
