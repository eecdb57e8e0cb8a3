//! Line graphs and their canonical clique partition.
//!
//! Vertex `i` of `L(G)` is edge `i` of `G` (dense edge ids), so the
//! edge-to-vertex map is the identity on indices. For every base vertex `v`
//! of degree at least 2, the line-graph vertices of the edges at `v` form the
//! clique `Q_v`; these cliques partition the edges of `L(G)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};

#[derive(Debug, Clone)]
pub struct LineGraphMap {
    base: Graph,
    lg: Graph,
}

impl LineGraphMap {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn lg(&self) -> &Graph {
        &self.lg
    }

    /// The line-graph vertex standing for base edge `uv`.
    pub fn to_lg(&self, u: Vertex, v: Vertex) -> Option<Vertex> {
        self.base.edge_index(u, v)
    }

    /// The base edge a line-graph vertex stands for.
    pub fn from_lg(&self, x: Vertex) -> Edge {
        self.base.edge(x)
    }

    /// Base vertex shared by the edges behind adjacent line-graph vertices.
    pub fn shared_endpoint(&self, x: Vertex, y: Vertex) -> Option<Vertex> {
        if x == y {
            return None;
        }
        let (a, b) = self.base.edge(x);
        let (c, d) = self.base.edge(y);
        [a, b].into_iter().find(|&p| p == c || p == d)
    }
}

/// `L(g)` for a connected `g` of order at least 3.
pub fn build_line_graph(g: &Graph) -> Result<LineGraphMap> {
    if g.order() <= 2 {
        return Err(Error::Precondition(format!(
            "line graphs need order > 2, got {}",
            g.order()
        )));
    }
    g.require_connected()
        .map_err(|_| Error::Precondition("base graph must be connected".into()))?;
    let mut edges = Vec::new();
    for v in g.vertices() {
        let ids = g.incident_edges(v);
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    let lg = Graph::new(g.size(), edges).expect("two distinct edges share at most one endpoint");
    Ok(LineGraphMap {
        base: g.clone(),
        lg,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clique {
    /// The base vertex `v` of `Q_v`.
    pub center: Vertex,
    /// Line-graph vertices (base edge ids at `center`), ascending.
    pub members: Vec<Vertex>,
}

impl Clique {
    pub fn contains(&self, x: Vertex) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Line-graph edges inside the clique.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.members
            .iter()
            .enumerate()
            .flat_map(move |(i, &a)| self.members[i + 1..].iter().map(move |&b| (a, b)))
    }
}

#[derive(Debug, Clone)]
pub struct CliquePartition {
    cliques: Vec<Clique>,
    slot: Vec<Option<usize>>,
}

impl CliquePartition {
    /// Cliques in ascending order of their centre.
    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    /// `Q_v`, or `None` when `deg(v) < 2`.
    pub fn clique(&self, v: Vertex) -> Option<&Clique> {
        self.slot
            .get(v)
            .copied()
            .flatten()
            .map(|i| &self.cliques[i])
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

pub fn canonical_partition(lgm: &LineGraphMap) -> CliquePartition {
    let base = lgm.base();
    let mut cliques = Vec::new();
    let mut slot = vec![None; base.order()];
    for v in base.vertices() {
        if base.degree(v) >= 2 {
            slot[v] = Some(cliques.len());
            cliques.push(Clique {
                center: v,
                members: base.incident_edges(v),
            });
        }
    }
    CliquePartition { cliques, slot }
}

/// Centre of the unique clique containing line-graph edge `xy`.
pub fn clique_of_lg_edge(lgm: &LineGraphMap, x: Vertex, y: Vertex) -> Result<Vertex> {
    if !lgm.lg().has_edge(x, y) {
        let (x, y) = edge(x, y);
        return Err(Error::Lookup(format!(
            "({x}, {y}) is not an edge of the line graph"
        )));
    }
    Ok(lgm
        .shared_endpoint(x, y)
        .expect("adjacent line-graph vertices share an endpoint"))
}
