//! Exact Hamiltonian-cycle search through a set of forced edges.
//!
//! Forced edges must form vertex-disjoint paths. Each forced path is
//! contracted into a segment that the search always traverses end to end,
//! so the branching happens only at segment ends. Two necessary conditions
//! prune the tree: every unvisited vertex still has enough usable
//! neighbours for its missing cycle edges, and the unvisited vertices stay
//! connected to both ends of the partial path.

use super::CycleWalk;
use crate::budget::Meter;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// A Hamiltonian cycle of `g` containing every edge of `forced`, or `None`
/// once the search tree is exhausted.
pub fn find_hamiltonian_cycle(
    g: &Graph,
    forced: &[Edge],
    meter: &mut Meter,
) -> Result<Option<CycleWalk>> {
    let n = g.order();
    let mut is_forced = vec![false; g.size()];
    let mut fadj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(u, v) in forced {
        let id = g
            .edge_index(u, v)
            .ok_or_else(|| Error::Precondition(format!("forced pair ({u}, {v}) is not an edge")))?;
        if std::mem::replace(&mut is_forced[id], true) {
            continue;
        }
        fadj[u].push(v);
        fadj[v].push(u);
    }
    if let Some(v) = (0..n).find(|&v| fadj[v].len() > 2) {
        return Err(Error::Precondition(format!(
            "vertex {v} has {} forced edges",
            fadj[v].len()
        )));
    }
    meter.tick()?;
    if n < 3 {
        return Ok(None);
    }

    // Walk every forced component from an end; leftover vertices with
    // forced degree 2 lie on forced cycles.
    let mut segment: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut placed = vec![false; n];
    for s in 0..n {
        if fadj[s].len() <= 1 && !placed[s] {
            let mut seg = vec![s];
            placed[s] = true;
            let (mut prev, mut cur) = (usize::MAX, s);
            while let Some(&next) = fadj[cur].iter().find(|&&w| w != prev) {
                seg.push(next);
                placed[next] = true;
                prev = cur;
                cur = next;
            }
            let end = cur;
            if end != s {
                let mut rev = seg.clone();
                rev.reverse();
                segment[end] = rev;
            }
            segment[s] = seg;
        }
    }
    if let Some(s) = (0..n).find(|&v| !placed[v]) {
        // A forced cycle: fine only if it is already Hamiltonian.
        let mut cyc = vec![s];
        let (mut prev, mut cur) = (usize::MAX, s);
        loop {
            let next = *fadj[cur].iter().find(|&&w| w != prev).unwrap();
            if next == s {
                break;
            }
            cyc.push(next);
            prev = cur;
            cur = next;
        }
        return Ok((cyc.len() == n).then(|| CycleWalk::close(g, cyc)));
    }

    let need: Vec<u8> = (0..n).map(|v| 2 - fadj[v].len() as u8).collect();
    let start = (0..n)
        .filter(|&v| need[v] > 0)
        .min_by_key(|&v| (free_degree(g, &is_forced, v), v))
        .expect("a forced path has an end");
    let mut search = Search {
        g,
        is_forced,
        need,
        segment,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        start,
        meter,
    };
    let first = search.segment[start].clone();
    for &v in &first {
        search.visited[v] = true;
    }
    search.path.extend(first);
    if search.extend()? {
        Ok(Some(CycleWalk::close(g, search.path)))
    } else {
        Ok(None)
    }
}

pub fn is_hamiltonian(g: &Graph, meter: &mut Meter) -> Result<bool> {
    Ok(find_hamiltonian_cycle(g, &[], meter)?.is_some())
}

fn free_degree(g: &Graph, is_forced: &[bool], v: Vertex) -> usize {
    g.neighbors(v)
        .iter()
        .filter(|&&w| !is_forced[g.edge_index(v, w).unwrap()])
        .count()
}

struct Search<'a> {
    g: &'a Graph,
    is_forced: Vec<bool>,
    need: Vec<u8>,
    segment: Vec<Vec<Vertex>>,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    start: Vertex,
    meter: &'a mut Meter,
}

impl Search<'_> {
    fn forced(&self, u: Vertex, v: Vertex) -> bool {
        self.is_forced[self.g.edge_index(u, v).unwrap()]
    }

    fn extend(&mut self) -> Result<bool> {
        self.meter.tick()?;
        let g = self.g;
        let cur = *self.path.last().unwrap();
        if self.path.len() == g.order() {
            return Ok(g.has_edge(cur, self.start) && !self.forced(cur, self.start));
        }
        if !self.feasible(cur) {
            return Ok(false);
        }
        let mut options: Vec<(usize, Vertex)> = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| !self.visited[w] && self.need[w] > 0 && !self.forced(cur, w))
            .map(|w| {
                let far = *self.segment[w].last().unwrap();
                (self.usable(far, w), w)
            })
            .collect();
        options.sort_unstable();
        for (_, w) in options {
            let seg = std::mem::take(&mut self.segment[w]);
            for &v in &seg {
                self.visited[v] = true;
            }
            self.path.extend_from_slice(&seg);
            let found = self.extend()?;
            if found {
                self.segment[w] = seg;
                return Ok(true);
            }
            for &v in &seg {
                self.visited[v] = false;
            }
            self.path.truncate(self.path.len() - seg.len());
            self.segment[w] = seg;
        }
        Ok(false)
    }

    /// Free neighbours of `v` that could still be its cycle neighbours,
    /// ignoring `except`.
    fn usable(&self, v: Vertex, except: Vertex) -> usize {
        let cur = *self.path.last().unwrap();
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&y| {
                y != except
                    && (!self.visited[y] || y == cur || y == self.start)
                    && !self.forced(v, y)
            })
            .count()
    }

    fn feasible(&self, cur: Vertex) -> bool {
        let g = self.g;
        let n = g.order();
        for x in 0..n {
            if !self.visited[x]
                && self.need[x] > 0
                && self.usable(x, usize::MAX) < self.need[x] as usize
            {
                return false;
            }
        }
        // Unvisited vertices plus `start` must all be reachable from `cur`
        // through unvisited vertices.
        let remaining = n - self.path.len();
        let mut seen = vec![false; n];
        seen[cur] = true;
        let mut stack = vec![cur];
        let mut reached = 0;
        let mut start_reached = false;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if w == self.start && u != cur {
                    start_reached = true;
                }
                if !seen[w] && !self.visited[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == remaining && (start_reached || remaining == 0)
    }
}

/// Number of Hamiltonian cycles of `g`, each counted once regardless of
/// direction or starting point.
pub fn count_hamiltonian_cycles(g: &Graph, meter: &mut Meter) -> Result<u64> {
    let n = g.order();
    if n < 3 {
        return Ok(0);
    }
    fn walk(
        g: &Graph,
        cur: Vertex,
        depth: usize,
        visited: &mut [bool],
        meter: &mut Meter,
    ) -> Result<u64> {
        meter.tick()?;
        if depth == g.order() {
            return Ok(g.has_edge(cur, 0) as u64);
        }
        let mut total = 0;
        for &w in g.neighbors(cur) {
            if !visited[w] {
                visited[w] = true;
                total += walk(g, w, depth + 1, visited, meter)?;
                visited[w] = false;
            }
        }
        Ok(total)
    }
    let mut visited = vec![false; n];
    visited[0] = true;
    Ok(walk(g, 0, 1, &mut visited, meter)? / 2)
}
