//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Edges are stored as `(u, v)` pairs with `u < v`, sorted lexicographically.
//! The position of an edge in that order is its dense edge id, which is
//! stable for a given edge set: re-parsing the same graph yields the same ids.

mod graph6;
mod iso;
mod named;
mod structure;

use std::fmt;

use crate::error::{Error, Result};

pub use graph6::{parse_graph6, write_graph6};
pub use iso::{are_isomorphic, isomorphism, DEFAULT_ISO_BOUND};
pub use named::{make_named_graph, NAMED_GRAPHS};

/// Graphs larger than this are refused outright; the searches here are
/// exponential and the adjacency table is quadratic.
pub const HARD_ORDER_LIMIT: usize = 4096;

pub type Vertex = usize;
/// An unordered vertex pair, normalised so that `.0 < .1`.
pub type Edge = (Vertex, Vertex);

/// Normalise an unordered pair.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    // n*n table of edge id + 1, zero where there is no edge.
    index: Vec<u32>,
}

impl Graph {
    /// Build a simple graph. Loops, duplicate edges and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        if n > HARD_ORDER_LIMIT {
            return Err(Error::Capacity(format!(
                "{n} vertices exceeds the limit of {HARD_ORDER_LIMIT}"
            )));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Structure(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Structure(format!("self-loop at vertex {u}")));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Structure(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        let mut index = vec![0u32; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            index[u * n + v] = i as u32 + 1;
            index[v * n + u] = i as u32 + 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            index,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// All edges in dense-id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Dense id of the edge `uv`, if present.
    #[inline]
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.index[u * self.n + v] {
            0 => None,
            i => Some(i as usize - 1),
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.index[u * self.n + v] != 0
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.min_degree();
        (self.max_degree() == d).then_some(d)
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.regularity() == Some(3)
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: Vertex) -> Vec<usize> {
        let mut ids: Vec<usize> = self.adj[v]
            .iter()
            .map(|&w| self.edge_index(v, w).unwrap())
            .collect();
        ids.sort_unstable();
        ids
    }

    /// The endpoint of edge `id` other than `v`.
    pub fn other_end(&self, id: usize, v: Vertex) -> Vertex {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Subgraph induced by `keep` (in the given order). Returns the graph
    /// and the map from new ids to old ids.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| edge(new_id[u], new_id[v]))
            .collect();
        let g =
            Graph::new(keep.len(), edges).expect("induced subgraph of a simple graph is simple");
        (g, keep.to_vec())
    }

    /// `G - v`, with the surviving vertices renumbered in ascending order.
    pub fn remove_vertex(&self, v: Vertex) -> (Graph, Vec<Vertex>) {
        let keep: Vec<Vertex> = self.vertices().filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// `G - F` for an edge set `F` (missing edges are ignored).
    pub fn remove_edges(&self, remove: &[Edge]) -> Graph {
        let mut drop = vec![false; self.size()];
        for &(u, v) in remove {
            if let Some(i) = self.edge_index(u, v) {
                drop[i] = true;
            }
        }
        let edges = self
            .edges
            .iter()
            .zip(drop)
            .filter(|(_, d)| !d)
            .map(|(&e, _)| e)
            .collect();
        Graph::from_sorted(self.n, edges)
    }

    /// Apply a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Parameter(
                "permutation length differs from order".into(),
            ));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parameter("not a permutation".into()));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Whether no edge joins two vertices of `set`.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
