//! Simple undirected graphs over dense vertex ids with bit-packed adjacency.

use std::fmt;

use serde::Serialize;

use crate::error::GraphError;
use crate::vertex_set::{subsets_of_size, VertexSet, MAX_VERTICES};

/// Vertex id, always in `0..n`.
pub type Vertex = usize;

/// An immutable simple undirected graph.
///
/// Adjacency is symmetric and irreflexive. Two graphs compare equal when they
/// have the same order and identical adjacency; the optional `name` is a
/// report label only.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            name: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let all = VertexSet::full(n);
        for (u, row) in adj.iter().enumerate() {
            if !row.is_subset(all) {
                let vertex = row.difference(all).first().unwrap_or(n);
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            if let Some(v) = row.iter().find(|&v| !adj[v].contains(u)) {
                return Err(GraphError::Asymmetric(u, v));
            }
        }
        Ok(Graph { n, adj, name: None })
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.n;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeStats {
            max: sequence.iter().copied().max().unwrap_or(0),
            min: sequence.iter().copied().min().unwrap_or(0),
            sequence,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn component_within(&self, start: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected. The empty set counts
    /// as connected.
    pub fn induces_connected(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(start) => self.component_within(start, set) == set,
        }
    }

    /// Connectivity by a single traversal; the empty graph is connected.
    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertices())
    }

    /// True iff `n > k` and removing any fewer than `k` vertices leaves a
    /// connected graph. Exact by enumerating every candidate cut.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.n <= k || !self.is_connected() {
            return false;
        }
        let all = self.vertices();
        (1..k).all(|size| {
            subsets_of_size(all, size).all(|cut| self.induces_connected(all.difference(cut)))
        })
    }

    /// Number of edges with exactly one endpoint in `s`.
    pub fn edge_boundary(&self, s: VertexSet) -> usize {
        let outside = s.complement(self.n);
        s.iter()
            .map(|v| self.adj[v].intersection(outside).len())
            .sum()
    }

    /// Number of edges with both endpoints in `s`.
    pub fn induced_edge_count(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| self.adj[v].intersection(s).len())
            .sum::<usize>()
            / 2
    }

    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|(u, v)| self.adj[u].intersection(self.adj[v]).len())
            .sum::<usize>()
            / 3
    }

    /// A proper 2-colouring as the set of vertices on one side, if one exists.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = VertexSet::EMPTY;
        let mut seen = VertexSet::EMPTY;
        while let Some(root) = seen.complement(self.n).first() {
            seen.insert(root);
            side.insert(root);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let u_side = side.contains(u);
                for w in self.adj[u] {
                    if seen.contains(w) {
                        if side.contains(w) == u_side {
                            return None;
                        }
                    } else {
                        seen.insert(w);
                        if !u_side {
                            side.insert(w);
                        }
                        stack.push(w);
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Degree-one vertices.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The graph with vertex `order[i]` relabelled as `i`.
    pub fn relabel(&self, order: &[Vertex]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        let mut position = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| self.adj[v].iter().map(|w| position[w]).collect())
            .collect();
        Graph {
            n: self.n,
            adj,
            name: self.name.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    pub sequence: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path, petersen};

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn degree_stats_examples() {
        let p = petersen();
        let s = p.degree_stats();
        assert_eq!((s.max, s.min), (3, 3));
        let star = complete_bipartite(1, 3).unwrap();
        let s = star.degree_stats();
        assert_eq!((s.max, s.min), (3, 1));
        assert_eq!(s.sequence, vec![3, 1, 1, 1]);
        let k5 = complete(5).unwrap();
        assert_eq!((k5.max_degree(), k5.min_degree()), (4, 4));
    }

    #[test]
    fn connectivity_examples() {
        let c5 = cycle(5).unwrap();
        assert!(c5.is_connected());
        assert!(c5.is_k_connected(2));
        assert!(!c5.is_k_connected(3));
        let p3 = path(3).unwrap();
        assert!(p3.is_connected());
        assert!(!p3.is_k_connected(2));
        let k4 = complete(4).unwrap();
        assert!(k4.is_k_connected(3));
        assert!(!k4.is_k_connected(4));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
        assert!(!two.is_k_connected(1));
    }

    #[test]
    fn edge_boundary_examples() {
        let k4 = complete(4).unwrap();
        let s: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(k4.edge_boundary(s), 4);
        assert_eq!(k4.edge_boundary(VertexSet::EMPTY), 0);
        let c6 = cycle(6).unwrap();
        let s: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(c6.edge_boundary(s), 2);
        assert_eq!(c6.edge_boundary(s.complement(6)), 2);
    }

    #[test]
    fn bipartition_and_triangles() {
        assert!(cycle(6).unwrap().bipartition().is_some());
        assert!(cycle(5).unwrap().bipartition().is_none());
        assert!(petersen().bipartition().is_none());
        assert_eq!(complete(4).unwrap().triangle_count(), 4);
        assert_eq!(petersen().triangle_count(), 0);
    }

    #[test]
    fn relabel_preserves_structure() {
        let p = path(4).unwrap();
        let q = p.relabel(&[3, 1, 0, 2]);
        assert_eq!(q.edge_count(), 3);
        assert!(q.is_tree());
        assert_eq!(q.leaves().to_vec(), vec![0, 2]);
    }
}
