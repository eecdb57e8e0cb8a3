//! Independent checkers for witnesses.
//!
//! These recompute everything from the raw vertex and edge lists with
//! plain set arithmetic and share no code with the searches, so a witness
//! that passes here does not depend on the search being right.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

fn key(u: Vertex, v: Vertex) -> Edge {
    (u.min(v), u.max(v))
}

/// Flags recomputed for a closed walk given as a vertex list with the
/// first vertex repeated last (or a single vertex).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WalkCheck {
    pub closed: bool,
    pub cycle: bool,
    pub tour: bool,
    pub euler: bool,
    pub hamiltonian: bool,
    pub dominating: bool,
}

pub fn check_walk(host: &Graph, walk: &[Vertex]) -> WalkCheck {
    let Some((&first, _)) = walk.split_first() else {
        return WalkCheck::default();
    };
    let host_edges: BTreeSet<Edge> = host.edges().iter().copied().collect();
    let mut steps: BTreeMap<Edge, usize> = BTreeMap::new();
    for pair in walk.windows(2) {
        let e = key(pair[0], pair[1]);
        if !host_edges.contains(&e) {
            return WalkCheck::default();
        }
        *steps.entry(e).or_default() += 1;
    }
    if walk.last() != Some(&first) {
        return WalkCheck::default();
    }
    let body = &walk[..walk.len().max(2) - 1];
    let distinct: BTreeSet<Vertex> = body.iter().copied().collect();
    let tour = steps.values().all(|&c| c == 1);
    let cycle = body.len() >= 3 && distinct.len() == body.len();
    WalkCheck {
        closed: true,
        cycle,
        tour,
        euler: tour && steps.len() == host_edges.len(),
        hamiltonian: cycle && distinct.len() == host.order(),
        dominating: host_edges
            .iter()
            .all(|(u, v)| distinct.contains(u) || distinct.contains(v)),
    }
}

/// `edges` is a perfect matching of `host`.
pub fn check_perfect_matching(host: &Graph, edges: &[Edge]) -> Result<()> {
    let mut covered = BTreeSet::new();
    for &(u, v) in edges {
        if !host.has_edge(u, v) {
            return Err(Error::Structure(format!("({u}, {v}) is not an edge")));
        }
        if !covered.insert(u) || !covered.insert(v) {
            return Err(Error::Structure(format!(
                "edge ({u}, {v}) meets another matching edge"
            )));
        }
    }
    if covered.len() != host.order() {
        return Err(Error::Structure(format!(
            "{} of {} vertices covered",
            covered.len(),
            host.order()
        )));
    }
    Ok(())
}

/// `walk` is a Hamiltonian cycle of `host` using every edge in `required`.
pub fn check_hamiltonian_containing(
    host: &Graph,
    walk: &[Vertex],
    required: &[Edge],
) -> Result<()> {
    if !check_walk(host, walk).hamiltonian {
        return Err(Error::Structure("walk is not a Hamiltonian cycle".into()));
    }
    let used: BTreeSet<Edge> = walk.windows(2).map(|p| key(p[0], p[1])).collect();
    match required.iter().find(|&&(u, v)| !used.contains(&key(u, v))) {
        Some((u, v)) => Err(Error::Structure(format!(
            "required edge ({u}, {v}) is missing"
        ))),
        None => Ok(()),
    }
}

/// Two Hamiltonian cycles with disjoint edge sets whose union is `E(host)`.
pub fn check_hamiltonian_decomposition(
    host: &Graph,
    first: &[Vertex],
    second: &[Vertex],
) -> Result<()> {
    for w in [first, second] {
        if !check_walk(host, w).hamiltonian {
            return Err(Error::Structure("a part is not a Hamiltonian cycle".into()));
        }
    }
    let a: BTreeSet<Edge> = first.windows(2).map(|p| key(p[0], p[1])).collect();
    let b: BTreeSet<Edge> = second.windows(2).map(|p| key(p[0], p[1])).collect();
    if !a.is_disjoint(&b) {
        return Err(Error::Structure("the cycles share an edge".into()));
    }
    if a.len() + b.len() != host.size() {
        return Err(Error::Structure(
            "the cycles do not cover every edge".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named_graph;

    #[test]
    fn walks() {
        let k4 = make_named_graph("complete", &[4]).unwrap();
        let ham = check_walk(&k4, &[0, 1, 2, 3, 0]);
        assert!(ham.hamiltonian && ham.cycle && ham.tour && ham.dominating && !ham.euler);
        assert!(!check_walk(&k4, &[0, 1, 2, 3]).closed);
        assert!(!check_walk(&k4, &[0, 0]).closed);
        let tri = check_walk(&k4, &[0, 1, 2, 0]);
        assert!(tri.cycle && !tri.hamiltonian && tri.dominating);
        let c4 = make_named_graph("cycle", &[4]).unwrap();
        assert!(check_walk(&c4, &[0, 1, 2, 3, 0]).euler);
        assert!(!check_walk(&c4, &[0, 2, 0]).closed);
        assert!(check_walk(&make_named_graph("star", &[3]).unwrap(), &[0]).dominating);
    }

    #[test]
    fn matchings_and_containment() {
        let c6 = make_named_graph("cycle", &[6]).unwrap();
        assert!(check_perfect_matching(&c6, &[(0, 1), (2, 3), (4, 5)]).is_ok());
        assert!(check_perfect_matching(&c6, &[(0, 1), (2, 3)]).is_err());
        assert!(check_perfect_matching(&c6, &[(0, 1), (1, 2), (4, 5)]).is_err());
        assert!(check_perfect_matching(&c6, &[(0, 3), (1, 2), (4, 5)]).is_err());
        let walk = [0, 1, 2, 3, 4, 5, 0];
        assert!(check_hamiltonian_containing(&c6, &walk, &[(1, 0), (2, 3), (4, 5)]).is_ok());
        let k4 = make_named_graph("complete", &[4]).unwrap();
        assert!(check_hamiltonian_containing(&k4, &[0, 1, 2, 3, 0], &[(0, 2)]).is_err());
        assert!(check_hamiltonian_decomposition(&c6, &walk, &walk).is_err());
    }
}
