//! Immutable simple undirected graphs on dense vertex ids `0..n`.

mod structure;
mod text;
mod union_find;
mod vertex_set;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use structure::{Distance, ShortestCycle};
pub use union_find::RollbackUnionFind;
pub use vertex_set::{Members, VertexSet};

pub(crate) use vertex_set::full_mask;

/// Largest supported order. Adjacency rows and vertex sets are single `u64` masks.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn other(&self, end: usize) -> usize {
        if end == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// A simple undirected graph.
///
/// Equality compares structure only; the optional name is a label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().map(|e| (e.u, e.v)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<Edge> = self.edges().collect();
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.order())?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { n, adj, name: None })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph> {
        Graph::new(n, edges.iter().map(|e| (e.u, e.v)))
    }

    /// Rebuilds a graph from raw adjacency rows, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let full = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in Members(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(GraphError::Precondition(format!(
                        "adjacency is not symmetric between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj, name: None })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, []).expect("empty graph within order limit")
    }

    pub fn named(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> Members {
        Members(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            Members(self.adj[u] & !full_mask(u + 1)).map(move |v| Edge { u, v })
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n) {
            Some(vertex) => Err(GraphError::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// `G[S]` relabelled to `0..|S|` in increasing id order. The second value
    /// maps each new id to its original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let members = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| {
                Members(self.adj[v] & s.bits()).fold(0u64, |row, u| row | 1 << index[u])
            })
            .collect();
        Ok((
            Graph {
                n: members.len(),
                adj,
                name: None,
            },
            members,
        ))
    }

    /// True iff `G[S]` has no cycle. Checked with a union-find over the edges inside `S`.
    pub fn is_induced_forest(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.is_acyclic_mask(s.bits()))
    }

    pub(crate) fn is_acyclic_mask(&self, mask: u64) -> bool {
        let mut uf = RollbackUnionFind::new(self.n);
        for u in Members(mask) {
            for v in Members(self.adj[u] & mask & !full_mask(u + 1)) {
                if !uf.union(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        let mask = s.bits();
        Members(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_forest(&self) -> bool {
        self.is_acyclic_mask(full_mask(self.n))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// True when the graph has no edges.
    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(GraphError::Precondition(format!(
                "permutation of length {} for graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if seen != full_mask(self.n) {
            return Err(GraphError::Precondition("not a permutation".into()));
        }
        Graph::new(self.n, self.edges().map(|e| (perm[e.u], perm[e.v])))
    }

    /// Same vertex set, one edge removed (no-op if absent).
    pub fn without_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        if e.u < self.n && e.v < self.n {
            g.adj[e.u] &= !(1 << e.v);
            g.adj[e.v] &= !(1 << e.u);
        }
        g
    }

    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        let mut g = self.clone();
        g.adj[e.u] |= 1 << e.v;
        g.adj[e.v] |= 1 << e.u;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, [(0, 1), (1, 0), (1, 2), (0, 2), (2, 0)]).unwrap();
        assert_eq!(g.size(), 3);
        assert!(g.is_complete());
        let e = Graph::new(4, []).unwrap();
        assert_eq!(e.order(), 4);
        assert!(e.is_edgeless());
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(Graph::new(65, []), Err(GraphError::TooLarge(65))));
        assert!(Edge::new(2, 2).is_err());
        assert_eq!(Edge::new(4, 1).unwrap(), Edge { u: 1, v: 4 });
    }

    #[test]
    fn from_adjacency_checks_symmetry() {
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (k2, map) = k4
            .induced_subgraph(&VertexSet::from_members(4, [1, 3]).unwrap())
            .unwrap();
        assert_eq!(k2, Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(map, vec![1, 3]);

        let c5 = cycle(5);
        let (p4, _) = c5
            .induced_subgraph(&VertexSet::from_members(5, [0, 1, 2, 3]).unwrap())
            .unwrap();
        assert_eq!(p4, Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap());

        let (same, map) = c5.induced_subgraph(&c5.vertices()).unwrap();
        assert_eq!(same, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        let bad = VertexSet::from_members(10, [7]).unwrap();
        assert!(c5.induced_subgraph(&bad).is_err());
    }

    #[test]
    fn induced_forest_on_triangle() {
        let k3 = cycle(3);
        let pair = VertexSet::from_members(3, [0, 2]).unwrap();
        assert!(k3.is_induced_forest(&pair).unwrap());
        assert!(!k3.is_induced_forest(&k3.vertices()).unwrap());
        assert!(k3.is_induced_forest(&VertexSet::empty(3)).unwrap());
    }

    #[test]
    fn permutation_preserves_size() {
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let h = g.permuted(&[3, 2, 1, 0]).unwrap();
        assert!(h.has_edge(3, 2) && h.has_edge(2, 1));
        assert_eq!(h.size(), 2);
        assert!(g.permuted(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn edge_iteration_is_sorted() {
        let g = Graph::new(4, [(2, 3), (0, 3), (1, 0)]).unwrap();
        let edges: Vec<_> = g.edges().map(|e| (e.u, e.v)).collect();
        assert_eq!(edges, vec![(0, 1), (0, 3), (2, 3)]);
    }
}
