//! Perfect matchings, and their correspondence with `P3`-decompositions.
//!
//! A perfect matching of `L(G)` pairs up the edges of `G` so that paired
//! edges share an endpoint; each pair is a 2-edge path (a `P3`) of `G`, and
//! the pairs partition `E(G)`. [`matching_to_p3`] and [`p3_to_matching`]
//! are the two directions of that bijection.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::line_graph::LineGraphMap;

const NONE: usize = usize::MAX;

/// A set of vertex-disjoint edges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Normalises and sorts `edges`; fails if two of them share a vertex.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Matching> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        let mut ends: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        ends.sort_unstable();
        if let Some(w) = ends.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "vertex {} is covered twice",
                w[0]
            )));
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }

    /// `mate[v]` is `v`'s partner, or `None`.
    pub fn mates(&self, n: usize) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// Every edge must belong to `host`.
    pub fn check_in(&self, host: &Graph) -> Result<()> {
        match self.edges.iter().find(|&&(u, v)| !host.has_edge(u, v)) {
            Some(&(u, v)) => Err(Error::Precondition(format!(
                "({u}, {v}) is not an edge of the host graph"
            ))),
            None => Ok(()),
        }
    }

    pub fn is_perfect(&self, host: &Graph) -> bool {
        self.check_in(host).is_ok() && 2 * self.edges.len() == host.order()
    }

    /// Like [`is_perfect`](Self::is_perfect) but names an uncovered vertex.
    pub fn require_perfect(&self, host: &Graph) -> Result<()> {
        self.check_in(host)?;
        let mate = self.mates(host.order());
        match mate.iter().position(Option::is_none) {
            Some(v) => Err(Error::Precondition(format!(
                "matching is not perfect: vertex {v} is uncovered"
            ))),
            None => Ok(()),
        }
    }
}

/// Perfect matchings of a graph in lexicographic order of their sorted
/// edge lists. Branches on the lowest uncovered vertex.
pub struct PerfectMatchings<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    frames: Vec<Frame>,
    state: State,
}

struct Frame {
    u: Vertex,
    next: usize,
    chosen: Option<Vertex>,
}

#[derive(PartialEq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl<'g> PerfectMatchings<'g> {
    /// Only matchings containing every `forced` edge are produced.
    pub fn with_forced(g: &'g Graph, forced: &[Edge]) -> Result<Self> {
        let m = Matching::new(forced.iter().copied())?;
        m.check_in(g)?;
        let mut mate = vec![NONE; g.order()];
        for &(u, v) in m.edges() {
            mate[u] = v;
            mate[v] = u;
        }
        Ok(PerfectMatchings {
            g,
            mate,
            frames: Vec::new(),
            state: State::Fresh,
        })
    }

    fn lowest_uncovered(&self) -> Option<Vertex> {
        self.mate.iter().position(|&m| m == NONE)
    }

    /// Every component of the uncovered vertices must be even, and no
    /// uncovered vertex may be stranded.
    fn feasible(&self) -> bool {
        let n = self.g.order();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if self.mate[s] != NONE || seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for &w in self.g.neighbors(u) {
                    if self.mate[w] == NONE && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if size % 2 == 1 {
                return false;
            }
        }
        true
    }

    fn snapshot(&self) -> Matching {
        let edges = self
            .mate
            .iter()
            .enumerate()
            .filter(|&(u, &w)| u < w)
            .map(|(u, &w)| (u, w))
            .collect();
        Matching { edges }
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if !self.feasible() {
                    self.state = State::Done;
                    return None;
                }
                match self.lowest_uncovered() {
                    None => {
                        self.state = State::Done;
                        return Some(self.snapshot());
                    }
                    Some(u) => self.frames.push(Frame {
                        u,
                        next: 0,
                        chosen: None,
                    }),
                }
            }
            State::Running => {}
        }
        loop {
            let Some(top) = self.frames.last_mut() else {
                self.state = State::Done;
                return None;
            };
            let u = top.u;
            if let Some(w) = top.chosen.take() {
                self.mate[u] = NONE;
                self.mate[w] = NONE;
            }
            let nbrs = self.g.neighbors(u);
            while top.next < nbrs.len() && self.mate[nbrs[top.next]] != NONE {
                top.next += 1;
            }
            if top.next == nbrs.len() {
                self.frames.pop();
                continue;
            }
            let w = nbrs[top.next];
            top.next += 1;
            top.chosen = Some(w);
            self.mate[u] = w;
            self.mate[w] = u;
            if !self.feasible() {
                continue;
            }
            match self.lowest_uncovered() {
                None => return Some(self.snapshot()),
                Some(x) => self.frames.push(Frame {
                    u: x,
                    next: 0,
                    chosen: None,
                }),
            }
        }
    }
}

pub fn enumerate_perfect_matchings(g: &Graph) -> PerfectMatchings<'_> {
    PerfectMatchings::with_forced(g, &[]).expect("no forced edges")
}

/// First perfect matching (in enumeration order) containing `forced`.
pub fn find_perfect_matching(g: &Graph, forced: &[Edge]) -> Result<Option<Matching>> {
    Ok(PerfectMatchings::with_forced(g, forced)?.next())
}

/// One path `ends.0 - center - ends.1` of a `P3`-decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct P3 {
    pub center: Vertex,
    pub ends: (Vertex, Vertex),
    /// Base edge ids of `center-ends.0` and `center-ends.1`.
    pub edges: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct P3Decomposition {
    pub paths: Vec<P3>,
}

impl P3Decomposition {
    /// Every base edge in exactly one path; each path's edges meet at its
    /// centre and nowhere else.
    pub fn validate(&self, base: &Graph) -> Result<()> {
        let mut used = vec![false; base.size()];
        for p in &self.paths {
            let (a, b) = p.ends;
            if a == b || a == p.center || b == p.center {
                return Err(Error::Structure(format!(
                    "degenerate path at centre {}",
                    p.center
                )));
            }
            for (end, id) in [(a, p.edges.0), (b, p.edges.1)] {
                if base.edge_index(p.center, end) != Some(id) {
                    return Err(Error::Structure(format!(
                        "path edge {id} is not {}-{end}",
                        p.center
                    )));
                }
                if std::mem::replace(&mut used[id], true) {
                    return Err(Error::Structure(format!("edge {id} used twice")));
                }
            }
        }
        match used.iter().position(|&u| !u) {
            Some(id) => Err(Error::Structure(format!("edge {id} not covered"))),
            None => Ok(()),
        }
    }

    /// `partner[e]` is the other edge on `e`'s path; `center[e]` its centre.
    pub fn pairing(&self, base: &Graph) -> (Vec<usize>, Vec<Vertex>) {
        let mut partner = vec![NONE; base.size()];
        let mut center = vec![NONE; base.size()];
        for p in &self.paths {
            partner[p.edges.0] = p.edges.1;
            partner[p.edges.1] = p.edges.0;
            center[p.edges.0] = p.center;
            center[p.edges.1] = p.center;
        }
        (partner, center)
    }
}

fn p3_from_edges(base: &Graph, center: Vertex, e: usize, f: usize) -> P3 {
    let (e, f) = if e < f { (e, f) } else { (f, e) };
    P3 {
        center,
        ends: (base.other_end(e, center), base.other_end(f, center)),
        edges: (e, f),
    }
}

/// The `P3`-decomposition of the base graph induced by a perfect matching
/// of its line graph, one path per matching edge, in matching order.
pub fn matching_to_p3(lgm: &LineGraphMap, m: &Matching) -> Result<P3Decomposition> {
    m.require_perfect(lgm.lg())?;
    let paths = m
        .edges()
        .iter()
        .map(|&(x, y)| {
            let c = lgm
                .shared_endpoint(x, y)
                .expect("matching edges are line-graph edges");
            p3_from_edges(lgm.base(), c, x, y)
        })
        .collect();
    Ok(P3Decomposition { paths })
}

/// Inverse of [`matching_to_p3`].
pub fn p3_to_matching(lgm: &LineGraphMap, d: &P3Decomposition) -> Result<Matching> {
    d.validate(lgm.base())?;
    Matching::new(d.paths.iter().map(|p| p.edges))
}

/// A `P3`-decomposition of a connected graph of even size.
///
/// Works leaves-first over a DFS tree: each vertex pairs up its unused
/// edges other than the one to its parent, adding the parent edge when the
/// count is odd. Whatever reaches the root is even because the total is.
pub fn find_p3_decomposition(g: &Graph) -> Result<P3Decomposition> {
    g.require_connected()?;
    if g.size() % 2 == 1 {
        return Err(Error::Parity(format!(
            "{} edges is odd; no P3-decomposition exists",
            g.size()
        )));
    }
    let n = g.order();
    let mut parent_edge = vec![NONE; n];
    let mut visited = vec![false; n];
    let mut postorder = Vec::with_capacity(n);
    let mut stack: Vec<(Vertex, usize)> = vec![(0, 0)];
    visited[0] = true;
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if let Some(&w) = g.neighbors(u).get(*i) {
            *i += 1;
            if !visited[w] {
                visited[w] = true;
                parent_edge[w] = g.edge_index(u, w).unwrap();
                stack.push((w, 0));
            }
        } else {
            postorder.push(u);
            stack.pop();
        }
    }

    let mut used = vec![false; g.size()];
    let mut paths = Vec::with_capacity(g.size() / 2);
    for &v in &postorder {
        let mut free: Vec<usize> = g
            .incident_edges(v)
            .into_iter()
            .filter(|&e| !used[e] && e != parent_edge[v])
            .collect();
        if free.len() % 2 == 1 {
            free.push(parent_edge[v]);
        }
        for pair in free.chunks(2) {
            used[pair[0]] = true;
            used[pair[1]] = true;
            paths.push(p3_from_edges(g, v, pair[0], pair[1]));
        }
    }
    let d = P3Decomposition { paths };
    debug_assert!(d.validate(g).is_ok());
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum OneExtendability {
    Extendable,
    /// The first edge (dense order) lying in no perfect matching.
    NotExtendable {
        witness: Edge,
    },
}

/// Whether every edge lies in some perfect matching, by a forced-edge
/// matching search per edge.
pub fn one_extendability_check(g: &Graph) -> OneExtendability {
    for &e in g.edges() {
        let found =
            find_perfect_matching(g, &[e]).expect("a single host edge is a valid forced set");
        if found.is_none() {
            return OneExtendability::NotExtendable { witness: e };
        }
    }
    OneExtendability::Extendable
}
