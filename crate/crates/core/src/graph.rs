//! Edge-colored graph and digraph data model with color-degree analytics.

use std::collections::BTreeSet;

use thiserror::Error;

pub type VertexId = usize;
pub type ColorId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub color: ColorId,
}

impl Edge {
    /// Normalized so that `u < v`.
    pub fn new(u: VertexId, v: VertexId, color: ColorId) -> Self {
        if u <= v {
            Edge { u, v, color }
        } else {
            Edge { u: v, v: u, color }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex id {id} out of range (vertex count {n})")]
    VertexOutOfRange { id: VertexId, n: usize },
    #[error("graph has no vertices")]
    EmptyVertexSet,
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(VertexId),
    #[error("two-cycle between {0} and {1} in oriented digraph")]
    TwoCycle(VertexId, VertexId),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(VertexId, VertexId),
}

/// A simple undirected graph with one color per edge. Immutable after
/// construction; adjacency is precomputed so degree queries are O(deg).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(VertexId, ColorId)>>,
}

impl EdgeColoredGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut es: Vec<Edge> = edges.into_iter().map(|e| Edge::new(e.u, e.v, e.color)).collect();
        es.sort_unstable();
        for e in &es {
            if e.u == e.v {
                return Err(GraphError::SelfLoop(e.u));
            }
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange { id: e.v, n });
            }
        }
        for w in es.windows(2) {
            if w[0].u == w[1].u && w[0].v == w[1].v {
                return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for e in &es {
            adj[e.u].push((e.v, e.color));
            adj[e.v].push((e.u, e.color));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(EdgeColoredGraph { n, edges: es, adj })
    }

    pub fn edgeless(n: usize) -> Self {
        EdgeColoredGraph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically by (u, v), with u < v.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, ColorId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_color(&self, u: VertexId, v: VertexId) -> Option<ColorId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, c)| c)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_color(u, v).is_some()
    }

    /// All colors appearing on edges, col(G).
    pub fn colors(&self) -> BTreeSet<ColorId> {
        self.edges.iter().map(|e| e.color).collect()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { id: v, n: self.n })
        }
    }

    /// Number of distinct colors on edges incident to `v`, d^c(v).
    pub fn color_degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        let mut cols: Vec<ColorId> = self.adj[v].iter().map(|&(_, c)| c).collect();
        cols.sort_unstable();
        cols.dedup();
        Ok(cols.len())
    }

    /// δ^c(G): minimum of d^c over all vertices.
    pub fn min_color_degree(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        Ok((0..self.n).map(|v| self.color_degree(v).unwrap()).min().unwrap())
    }

    /// col(M, N): colors on edges with one end in M and the other in N.
    pub fn color_set_between(
        &self,
        m: &BTreeSet<VertexId>,
        n: &BTreeSet<VertexId>,
    ) -> Result<BTreeSet<ColorId>, GraphError> {
        for &v in m.iter().chain(n.iter()) {
            self.check_vertex(v)?;
        }
        if let Some(&v) = m.intersection(n).next() {
            return Err(GraphError::OverlappingSets(v));
        }
        let mut cols = BTreeSet::new();
        for e in &self.edges {
            if (m.contains(&e.u) && n.contains(&e.v)) || (n.contains(&e.u) && m.contains(&e.v)) {
                cols.insert(e.color);
            }
        }
        Ok(cols)
    }

    /// Subgraph on the same vertex set containing exactly the edges colored `c`.
    pub fn color_class(&self, c: ColorId) -> EdgeColoredGraph {
        let es: Vec<Edge> = self.edges.iter().copied().filter(|e| e.color == c).collect();
        EdgeColoredGraph::new(self.n, es).expect("color class of a valid graph is valid")
    }

    /// G[S] with vertices relabeled 0..|S|; the mapping back to original ids
    /// is returned alongside.
    pub fn induced_subgraph(&self, s: &BTreeSet<VertexId>) -> Result<InducedSubgraph, GraphError> {
        for &v in s {
            self.check_vertex(v)?;
        }
        let to_parent: Vec<VertexId> = s.iter().copied().collect();
        let index_of = |v: VertexId| to_parent.binary_search(&v).ok();
        let mut es = Vec::new();
        for e in &self.edges {
            if let (Some(u), Some(v)) = (index_of(e.u), index_of(e.v)) {
                es.push(Edge::new(u, v, e.color));
            }
        }
        let graph = EdgeColoredGraph::new(to_parent.len(), es)?;
        Ok(InducedSubgraph { graph, to_parent })
    }

    /// The unique maximal S such that δ^c(G[S]) ≥ 2, computed by iteratively
    /// peeling the lowest-indexed vertex with current color degree < 2.
    pub fn two_color_core(&self) -> BTreeSet<VertexId> {
        two_color_core_of(self.n, &self.edges)
    }
}

#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: EdgeColoredGraph,
    pub to_parent: Vec<VertexId>,
}

/// Peel an explicit edge list (on original vertex ids) down to its 2-color
/// core. Works on subgraphs that are not induced.
pub fn two_color_core_of(n: usize, edges: &[Edge]) -> BTreeSet<VertexId> {
    let mut active: Vec<bool> = vec![false; n];
    for e in edges {
        active[e.u] = true;
        active[e.v] = true;
    }
    loop {
        let mut peeled = false;
        for v in 0..n {
            if !active[v] {
                continue;
            }
            let mut cols = BTreeSet::new();
            for e in edges {
                if (e.u == v && active[e.v]) || (e.v == v && active[e.u]) {
                    cols.insert(e.color);
                }
            }
            if cols.len() < 2 {
                active[v] = false;
                peeled = true;
                break;
            }
        }
        if !peeled {
            break;
        }
    }
    (0..n).filter(|&v| active[v]).collect()
}

/// Edges of `edges` with both endpoints in `s`.
pub fn edges_within(edges: &[Edge], s: &BTreeSet<VertexId>) -> Vec<Edge> {
    edges.iter().copied().filter(|e| s.contains(&e.u) && s.contains(&e.v)).collect()
}

/// A simple directed graph; when `oriented`, at most one of (u,v), (v,u)
/// is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(VertexId, VertexId)>,
    oriented: bool,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
}

impl Digraph {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (VertexId, VertexId)>,
        oriented: bool,
    ) -> Result<Self, GraphError> {
        let mut arcs: Vec<(VertexId, VertexId)> = arcs.into_iter().collect();
        arcs.sort_unstable();
        arcs.dedup();
        let mut seen = BTreeSet::new();
        for &(u, v) in &arcs {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { id: u.max(v), n });
            }
            if oriented && seen.contains(&(v, u)) {
                return Err(GraphError::TwoCycle(v, u));
            }
            seen.insert((u, v));
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        Ok(Digraph { n, arcs, oriented, out_adj, in_adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// δ⁺(D): minimum out-degree.
    pub fn min_out_degree(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        Ok((0..self.n).map(|v| self.out_degree(v)).min().unwrap())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TargetsError {
    #[error("targets must be nonempty")]
    Empty,
    #[error("target {0} is below 1")]
    BelowOne(usize),
}

/// Per-part color-degree targets (a₁, …, a_k), all ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTargets(Vec<usize>);

impl PartitionTargets {
    pub fn new(targets: Vec<usize>) -> Result<Self, TargetsError> {
        if targets.is_empty() {
            return Err(TargetsError::Empty);
        }
        if let Some(&t) = targets.iter().find(|&&t| t < 1) {
            return Err(TargetsError::BelowOne(t));
        }
        Ok(PartitionTargets(targets))
    }

    pub fn uniform(k: usize, a: usize) -> Result<Self, TargetsError> {
        Self::new(vec![a; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Σ(aᵢ − 1) + 1, the color-degree floor for greedy extension.
    pub fn extension_floor(&self) -> usize {
        self.0.iter().map(|&a| a - 1).sum::<usize>() + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{pc_cycle_graph, rainbow_complete};

    fn bowtie_fixture() -> EdgeColoredGraph {
        // z=0, a=1, b=2, c=3, d=4; triangle z-a-b colored 1,2,1 and
        // triangle z-c-d colored 2,1,2.
        EdgeColoredGraph::new(
            5,
            [
                Edge::new(0, 1, 1),
                Edge::new(1, 2, 2),
                Edge::new(2, 0, 1),
                Edge::new(0, 3, 2),
                Edge::new(3, 4, 1),
                Edge::new(4, 0, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_violations() {
        assert_eq!(
            EdgeColoredGraph::new(3, [Edge::new(0, 0, 1)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            EdgeColoredGraph::new(3, [Edge::new(0, 1, 1), Edge::new(1, 0, 2)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            EdgeColoredGraph::new(2, [Edge::new(0, 5, 1)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn color_degree_examples() {
        let k4 = rainbow_complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(k4.color_degree(v).unwrap(), 3);
        }
        // monochromatic star center
        let star = EdgeColoredGraph::new(
            4,
            [Edge::new(0, 1, 7), Edge::new(0, 2, 7), Edge::new(0, 3, 7)],
        )
        .unwrap();
        assert_eq!(star.color_degree(0).unwrap(), 1);
        // bowtie fixture, vertex z
        assert_eq!(bowtie_fixture().color_degree(0).unwrap(), 2);
        assert!(star.color_degree(9).is_err());
    }

    #[test]
    fn min_color_degree_examples() {
        assert_eq!(rainbow_complete(5).unwrap().min_color_degree().unwrap(), 4);
        assert_eq!(pc_cycle_graph(4).unwrap().min_color_degree().unwrap(), 2);
        let mut edges = rainbow_complete(3).unwrap().edges().to_vec();
        edges.retain(|_| true);
        let with_isolated = EdgeColoredGraph::new(4, edges).unwrap();
        assert_eq!(with_isolated.min_color_degree().unwrap(), 0);
        assert_eq!(
            EdgeColoredGraph::edgeless(0).min_color_degree(),
            Err(GraphError::EmptyVertexSet)
        );
    }

    #[test]
    fn color_set_between_examples() {
        let k4 = rainbow_complete(4).unwrap();
        let m: BTreeSet<_> = [0].into();
        let n: BTreeSet<_> = [1, 2].into();
        assert_eq!(k4.color_set_between(&m, &n).unwrap().len(), 2);
        // no crossing edges
        let g = EdgeColoredGraph::new(4, [Edge::new(0, 1, 0), Edge::new(2, 3, 1)]).unwrap();
        let m: BTreeSet<_> = [0, 1].into();
        let n: BTreeSet<_> = [2, 3].into();
        assert!(g.color_set_between(&m, &n).unwrap().is_empty());
        let overlap: BTreeSet<_> = [1, 2].into();
        assert!(g.color_set_between(&m, &overlap).is_err());
    }

    #[test]
    fn color_class_examples() {
        let mono = EdgeColoredGraph::new(
            3,
            [Edge::new(0, 1, 5), Edge::new(1, 2, 5), Edge::new(0, 2, 5)],
        )
        .unwrap();
        assert_eq!(mono.color_class(5), mono);
        assert_eq!(mono.color_class(9).edge_count(), 0);
        let c4 = pc_cycle_graph(4).unwrap();
        let class: Vec<ColorId> = c4.colors().into_iter().collect();
        assert_eq!(c4.color_class(class[0]).edge_count(), 2);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = rainbow_complete(5).unwrap();
        let all: BTreeSet<_> = (0..5).collect();
        let sub = k5.induced_subgraph(&all).unwrap();
        assert_eq!(sub.graph, k5);
        let single: BTreeSet<_> = [2].into();
        let sub = k5.induced_subgraph(&single).unwrap();
        assert_eq!(sub.graph.vertex_count(), 1);
        assert_eq!(sub.graph.edge_count(), 0);
        let tri: BTreeSet<_> = [0, 2, 4].into();
        let sub = k5.induced_subgraph(&tri).unwrap();
        assert_eq!(sub.graph.colors().len(), 3);
        assert_eq!(sub.to_parent, vec![0, 2, 4]);
    }

    #[test]
    fn two_color_core_examples() {
        // monochromatic K5: all color degrees 1
        let mut es = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                es.push(Edge::new(u, v, 0));
            }
        }
        let mono = EdgeColoredGraph::new(5, es).unwrap();
        assert!(mono.two_color_core().is_empty());

        // alternating C4 plus a pendant vertex
        let mut es = pc_cycle_graph(4).unwrap().edges().to_vec();
        es.push(Edge::new(0, 4, 9));
        let g = EdgeColoredGraph::new(5, es).unwrap();
        assert_eq!(g.two_color_core(), (0..4).collect());

        // P4 colored 1,2,1 cascades to empty
        let p4 = EdgeColoredGraph::new(
            4,
            [Edge::new(0, 1, 1), Edge::new(1, 2, 2), Edge::new(2, 3, 1)],
        )
        .unwrap();
        assert!(p4.two_color_core().is_empty());
    }

    #[test]
    fn min_out_degree_examples() {
        let tri = Digraph::new(3, [(0, 1), (1, 2), (2, 0)], true).unwrap();
        assert_eq!(tri.min_out_degree().unwrap(), 1);
        let trans = Digraph::new(3, [(0, 1), (0, 2), (1, 2)], true).unwrap();
        assert_eq!(trans.min_out_degree().unwrap(), 0);
        // rotational tournament on 5 vertices: v beats v+1, v+2 (mod 5)
        let mut arcs = Vec::new();
        for v in 0..5usize {
            arcs.push((v, (v + 1) % 5));
            arcs.push((v, (v + 2) % 5));
        }
        let rot = Digraph::new(5, arcs, true).unwrap();
        assert_eq!(rot.min_out_degree().unwrap(), 2);
    }

    #[test]
    fn digraph_rejects_two_cycles_when_oriented() {
        assert!(Digraph::new(2, [(0, 1), (1, 0)], true).is_err());
        assert!(Digraph::new(2, [(0, 1), (1, 0)], false).is_ok());
    }
}
