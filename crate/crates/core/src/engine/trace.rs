use super::certify;
use crate::cycles::{is_arbitrarily_traceable, CycleWalk, Traceability};
use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::line_graph::LineGraphMap;
use crate::matching::{matching_to_p3, Matching};

/// Hamiltonian cycle of `L(G)` through `m` for a base graph of even size
/// that is arbitrarily traceable from `v`.
///
/// Each `P3` of the decomposition induced by `m` is treated as a single
/// link between its two ends: arriving at a centre along one edge of a
/// path forces leaving along the other. An Euler tour of these links,
/// found by Hierholzer's algorithm from `v`, is an Euler tour of `G` in
/// which both edges of every `P3` are consecutive; its edge sequence is
/// the cycle. The links form a connected even multigraph exactly when such
/// a constrained tour exists, so the walk never needs to backtrack.
///
/// Such a tour need not exist. In two 4-cycles sharing a vertex `c`, the
/// decomposition that pairs both edges at `c` inside each square splits
/// the links into two components; that matching of `L(G)` lies in no
/// Hamiltonian cycle at all, and this function returns a construction
/// error for it.
pub fn extend_matching_arb_traceable(
    lgm: &LineGraphMap,
    v: Vertex,
    m: &Matching,
) -> Result<CycleWalk> {
    let base = lgm.base();
    if base.size() % 2 == 1 {
        return Err(Error::Parity(format!(
            "the base graph has {} edges",
            base.size()
        )));
    }
    if let Traceability::NotTraceable(why) = is_arbitrarily_traceable(base, v)? {
        return Err(Error::Precondition(format!(
            "the base graph is not arbitrarily traceable from {v}: {why:?}"
        )));
    }
    let d = matching_to_p3(lgm, m)?;

    // Link i joins d.paths[i].ends; links[u] lists (link, far end).
    let mut links: Vec<Vec<(usize, Vertex)>> = vec![Vec::new(); base.order()];
    for (i, p) in d.paths.iter().enumerate() {
        links[p.ends.0].push((i, p.ends.1));
        links[p.ends.1].push((i, p.ends.0));
    }
    let start = if links[v].is_empty() {
        d.paths[0].ends.0
    } else {
        v
    };
    let mut used = vec![false; d.paths.len()];
    let mut next = vec![0usize; base.order()];
    // Stack of (vertex, link used to reach it).
    let mut stack: Vec<(Vertex, Option<usize>)> = vec![(start, None)];
    let mut order: Vec<(usize, Vertex)> = Vec::new();
    while let Some(&(u, via)) = stack.last() {
        while next[u] < links[u].len() && used[links[u][next[u]].0] {
            next[u] += 1;
        }
        if next[u] == links[u].len() {
            stack.pop();
            if let Some(i) = via {
                order.push((i, u));
            }
        } else {
            let (i, w) = links[u][next[u]];
            used[i] = true;
            stack.push((w, Some(i)));
        }
    }
    if order.len() != d.paths.len() {
        return Err(Error::Construction(
            "no Euler tour keeps every P3 of the matching consecutive: the P3 links are disconnected".into(),
        ));
    }
    // `order` lists links backwards, each with the end it arrived at; read
    // forwards, link i is entered at its other end.
    order.reverse();
    let mut seq = Vec::with_capacity(base.size());
    for (i, arrive) in order {
        let p = d.paths[i];
        if arrive == p.ends.1 {
            seq.extend([p.edges.0, p.edges.1]);
        } else {
            seq.extend([p.edges.1, p.edges.0]);
        }
    }
    certify(lgm.lg(), seq, m, "the constrained Euler tour")
}
