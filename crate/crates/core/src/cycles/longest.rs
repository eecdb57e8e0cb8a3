use serde::Serialize;

use super::{find_hamiltonian_cycle, CycleWalk};
use crate::budget::Meter;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Circumference {
    pub length: usize,
    /// A cycle of that length.
    pub witness: CycleWalk,
}

/// Length of a longest cycle.
///
/// The search runs on the 2-core. It first tries a Hamiltonian cycle and
/// then cycles missing one vertex; otherwise it falls back to branch and
/// bound over cycles by least vertex.
pub fn circumference(g: &Graph, meter: &mut Meter) -> Result<Circumference> {
    if g.is_forest() {
        return Err(Error::Structure(
            "an acyclic graph has no circumference".into(),
        ));
    }
    let (core, map) = two_core(g);
    let n = core.order();
    let found = |c: CycleWalk| {
        let witness = c.mapped(g, &map);
        Ok(Circumference {
            length: witness.len(),
            witness,
        })
    };
    if let Some(c) = find_hamiltonian_cycle(&core, &[], meter)? {
        return found(c);
    }
    for v in core.vertices() {
        let (h, sub) = core.remove_vertex(v);
        if let Some(c) = find_hamiltonian_cycle(&h, &[], meter)? {
            return found(c.mapped(&core, &sub));
        }
    }

    let mut bb = Bound {
        g: &core,
        visited: vec![false; n],
        path: Vec::new(),
        best: Vec::new(),
        start: 0,
        meter,
    };
    for s in 0..n {
        if n - s <= bb.best.len() {
            break;
        }
        bb.start = s;
        bb.visited[s] = true;
        bb.path.push(s);
        bb.grow()?;
        bb.path.pop();
        bb.visited[s] = false;
    }
    let best = std::mem::take(&mut bb.best);
    found(CycleWalk::close(&core, best))
}

struct Bound<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    best: Vec<Vertex>,
    start: Vertex,
    meter: &'a mut Meter,
}

impl Bound<'_> {
    fn grow(&mut self) -> Result<()> {
        self.meter.tick()?;
        let g = self.g;
        let cur = *self.path.last().unwrap();
        if self.path.len() >= 3 && self.path.len() > self.best.len() && g.has_edge(cur, self.start)
        {
            self.best = self.path.clone();
        }
        if self.path.len() + self.reachable(cur) <= self.best.len() {
            return Ok(());
        }
        for &w in g.neighbors(cur) {
            if w > self.start && !self.visited[w] {
                self.visited[w] = true;
                self.path.push(w);
                self.grow()?;
                self.path.pop();
                self.visited[w] = false;
            }
        }
        Ok(())
    }

    /// Unvisited vertices above `start` reachable from `cur` through such
    /// vertices.
    fn reachable(&self, cur: Vertex) -> usize {
        let mut seen = vec![false; self.g.order()];
        let mut stack = vec![cur];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            for &w in self.g.neighbors(u) {
                if w > self.start && !self.visited[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }
}

/// The subgraph left after repeatedly deleting vertices of degree at most
/// one, with its map back to `g`.
fn two_core(g: &Graph) -> (Graph, Vec<Vertex>) {
    let mut deg = g.degrees();
    let mut gone = vec![false; g.order()];
    let mut stack: Vec<Vertex> = g.vertices().filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if std::mem::replace(&mut gone[v], true) {
            continue;
        }
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let keep: Vec<Vertex> = g.vertices().filter(|&v| !gone[v]).collect();
    g.induced_subgraph(&keep)
}

/// Not Hamiltonian, while every vertex-deleted subgraph is.
pub fn is_hypohamiltonian(g: &Graph, meter: &mut Meter) -> Result<bool> {
    if g.order() < 4 || find_hamiltonian_cycle(g, &[], meter)?.is_some() {
        return Ok(false);
    }
    for v in g.vertices() {
        let (h, _) = g.remove_vertex(v);
        if find_hamiltonian_cycle(&h, &[], meter)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
