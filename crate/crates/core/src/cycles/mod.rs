//! Closed walks and the exact searches that produce them: Hamiltonian
//! cycles (optionally through forced edges), dominating cycles and tours,
//! Euler tours, longest cycles, and the traceability predicates.

mod dominating;
mod euler;
mod hamiltonian;
mod longest;

use serde::Serialize;

use crate::graph::{edge, Edge, Graph, Vertex};

pub use dominating::{
    find_dominating_cycle, find_dominating_tour, has_dominating_tour, MAX_CYCLE_SPACE_DIM,
};
pub use euler::{euler_tour, is_arbitrarily_traceable, TraceFailure, Traceability};
pub use hamiltonian::{count_hamiltonian_cycles, find_hamiltonian_cycle, is_hamiltonian};
pub use longest::{circumference, is_hypohamiltonian, Circumference};

/// What a closed walk is, relative to its host graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WalkKind {
    /// No repeated vertex.
    pub cycle: bool,
    /// No repeated edge.
    pub tour: bool,
    /// Uses every host edge exactly once.
    pub euler: bool,
    /// A cycle through every host vertex.
    pub hamiltonian: bool,
    /// Every host edge has an endpoint on the walk.
    pub dominating: bool,
}

/// A closed walk stored with its first vertex repeated at the end. A
/// single vertex `[v]` is the trivial tour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWalk {
    walk: Vec<Vertex>,
    kind: WalkKind,
}

impl CycleWalk {
    /// Close `seq` (listed without the repeat) into a walk of `host` and
    /// record which kinds it satisfies.
    pub fn close(host: &Graph, seq: Vec<Vertex>) -> CycleWalk {
        let mut walk = seq;
        if walk.len() > 1 {
            walk.push(walk[0]);
        }
        let kind = classify(host, &walk);
        CycleWalk { walk, kind }
    }

    pub fn trivial(host: &Graph, v: Vertex) -> CycleWalk {
        CycleWalk::close(host, vec![v])
    }

    /// The closed vertex list, first vertex repeated last.
    pub fn vertices(&self) -> &[Vertex] {
        &self.walk
    }

    /// The vertex cycle without the closing repeat.
    pub fn cyclic(&self) -> &[Vertex] {
        if self.walk.len() > 1 {
            &self.walk[..self.walk.len() - 1]
        } else {
            &self.walk
        }
    }

    pub fn kind(&self) -> WalkKind {
        self.kind
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.walk.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Traversed edges in walk order (normalised pairs).
    pub fn edges(&self) -> Vec<Edge> {
        self.walk.windows(2).map(|w| edge(w[0], w[1])).collect()
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        let e = edge(u, v);
        self.walk.windows(2).any(|w| edge(w[0], w[1]) == e)
    }

    /// Vertices on the walk, ascending.
    pub fn touched(&self) -> Vec<Vertex> {
        let mut t = self.walk.clone();
        t.sort_unstable();
        t.dedup();
        t
    }

    /// Apply a vertex map, e.g. from an induced subgraph back to its host.
    pub(crate) fn mapped(&self, host: &Graph, map: &[Vertex]) -> CycleWalk {
        CycleWalk::close(host, self.cyclic().iter().map(|&v| map[v]).collect())
    }
}

fn classify(host: &Graph, walk: &[Vertex]) -> WalkKind {
    let steps: Vec<Edge> = walk.windows(2).map(|w| edge(w[0], w[1])).collect();
    let adjacent = steps.iter().all(|&(u, v)| host.has_edge(u, v));
    let closed = walk.first() == walk.last() && !walk.is_empty();
    if !adjacent || !closed {
        return WalkKind::default();
    }
    let mut sorted = steps.clone();
    sorted.sort_unstable();
    let tour = sorted.windows(2).all(|w| w[0] != w[1]);
    let body = if walk.len() > 1 {
        &walk[..walk.len() - 1]
    } else {
        walk
    };
    let mut vs = body.to_vec();
    vs.sort_unstable();
    vs.dedup();
    let cycle = body.len() >= 3 && vs.len() == body.len();
    let mut on = vec![false; host.order()];
    for &v in body {
        on[v] = true;
    }
    WalkKind {
        cycle,
        tour,
        euler: tour && sorted.len() == host.size(),
        hamiltonian: cycle && vs.len() == host.order(),
        dominating: host.edges().iter().all(|&(u, v)| on[u] || on[v]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named_graph;

    #[test]
    fn classify_kinds() {
        let bowtie = make_named_graph("bowtie", &[]).unwrap();
        let tri = CycleWalk::close(&bowtie, vec![0, 1, 2]);
        assert_eq!(
            tri.kind(),
            WalkKind {
                cycle: true,
                tour: true,
                euler: false,
                hamiltonian: false,
                dominating: false
            }
        );
        assert_eq!(tri.vertices(), &[0, 1, 2, 0]);
        let figure_eight = CycleWalk::close(&bowtie, vec![0, 1, 2, 0, 3, 4]);
        assert_eq!(
            figure_eight.kind(),
            WalkKind {
                cycle: false,
                tour: true,
                euler: true,
                hamiltonian: false,
                dominating: true
            }
        );
        assert!(!CycleWalk::trivial(&bowtie, 0).kind().dominating);
        let claw = make_named_graph("star", &[3]).unwrap();
        let hub = CycleWalk::trivial(&claw, 0);
        assert_eq!(hub.len(), 0);
        assert!(hub.kind().dominating && hub.kind().tour && !hub.kind().cycle);
        let leaf = CycleWalk::trivial(&claw, 1);
        assert!(!leaf.kind().dominating);
    }
}
