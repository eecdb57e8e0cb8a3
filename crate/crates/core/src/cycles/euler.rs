use serde::Serialize;

use super::CycleWalk;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// An Euler tour of a connected graph, or `None` when some degree is odd.
///
/// Hierholzer's algorithm from vertex 0, always leaving by the lowest
/// unused edge id, so the output is fixed for a fixed input.
pub fn euler_tour(g: &Graph) -> Result<Option<CycleWalk>> {
    g.require_connected()?;
    if g.vertices().any(|v| g.degree(v) % 2 == 1) {
        return Ok(None);
    }
    if g.size() == 0 {
        return Ok(Some(CycleWalk::trivial(g, 0)));
    }
    let used = vec![false; g.size()];
    Ok(Some(CycleWalk::close(g, circuit(g, 0, used))))
}

/// Euler tour of the spanning subgraph whose edge ids are the set bits of
/// `mask`, if that subgraph is even and its edges are connected.
pub(crate) fn hierholzer(g: &Graph, mask: u128) -> Option<CycleWalk> {
    let mut used = vec![true; g.size()];
    let mut start = None;
    let mut parity = vec![0u8; g.order()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> id & 1 == 1 {
            used[id] = false;
            parity[u] ^= 1;
            parity[v] ^= 1;
            start.get_or_insert(u);
        }
    }
    let start = start?;
    if parity.contains(&1) {
        return None;
    }
    let total = mask.count_ones() as usize;
    let seq = circuit(g, start, used);
    (seq.len() == total).then(|| CycleWalk::close(g, seq))
}

/// Closed trail from `start` over every unused edge reachable from it,
/// listed without the closing repeat. Assumes even degrees.
fn circuit(g: &Graph, start: Vertex, mut used: Vec<bool>) -> Vec<Vertex> {
    let mut next = vec![0usize; g.order()];
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(&u) = stack.last() {
        let inc = g.incident_edges(u);
        while next[u] < inc.len() && used[inc[next[u]]] {
            next[u] += 1;
        }
        if next[u] == inc.len() {
            out.push(u);
            stack.pop();
        } else {
            let id = inc[next[u]];
            used[id] = true;
            stack.push(g.other_end(id, u));
        }
    }
    out.reverse();
    out.pop();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum TraceFailure {
    Disconnected,
    OddDegree {
        vertex: Vertex,
    },
    /// A cycle of `G - v`, which no trail from `v` can be forced around.
    CycleAvoids {
        cycle: Vec<Vertex>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Traceability {
    Traceable,
    NotTraceable(TraceFailure),
}

impl Traceability {
    pub fn is_traceable(&self) -> bool {
        matches!(self, Traceability::Traceable)
    }
}

/// Whether every trail starting at `v` extends to an Euler tour. For a
/// connected eulerian graph this holds exactly when `G - v` is a forest.
pub fn is_arbitrarily_traceable(g: &Graph, v: Vertex) -> Result<Traceability> {
    if v >= g.order() {
        return Err(Error::Parameter(format!("vertex {v} out of range")));
    }
    if !g.is_connected() {
        return Ok(Traceability::NotTraceable(TraceFailure::Disconnected));
    }
    if let Some(vertex) = g.vertices().find(|&x| g.degree(x) % 2 == 1) {
        return Ok(Traceability::NotTraceable(TraceFailure::OddDegree {
            vertex,
        }));
    }
    let (h, map) = g.remove_vertex(v);
    Ok(match find_cycle(&h) {
        Some(c) => Traceability::NotTraceable(TraceFailure::CycleAvoids {
            cycle: c.into_iter().map(|x| map[x]).collect(),
        }),
        None => Traceability::Traceable,
    })
}

/// Any cycle of `g`, as a vertex list without the closing repeat.
fn find_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if w == parent[u] {
                    continue;
                }
                if seen[w] {
                    // Tree paths from u and w meet at their common ancestor.
                    let mut up = vec![u];
                    while *up.last().unwrap() != root {
                        let p = parent[*up.last().unwrap()];
                        up.push(p);
                    }
                    let mut down = vec![w];
                    while !up.contains(down.last().unwrap()) {
                        let p = parent[*down.last().unwrap()];
                        down.push(p);
                    }
                    let meet = *down.last().unwrap();
                    let mut cycle: Vec<Vertex> =
                        up.into_iter().take_while(|&x| x != meet).collect();
                    cycle.push(meet);
                    down.pop();
                    cycle.extend(down.into_iter().rev());
                    return Some(cycle);
                }
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    None
}
