use serde::Serialize;

use super::{certify, extend_matching_subcubic};
use crate::budget::Meter;
use crate::cycles::CycleWalk;
use crate::error::{Error, Result};
use crate::graph::{make_named_graph, Edge, Graph, Vertex};
use crate::line_graph::{build_line_graph, Clique, LineGraphMap};
use crate::matching::Matching;

/// A colour per base edge, indexed by edge id. Not necessarily proper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct EdgeColouring {
    colour: Vec<usize>,
}

impl EdgeColouring {
    pub fn new(g: &Graph, colour: Vec<usize>) -> Result<EdgeColouring> {
        if colour.len() != g.size() {
            return Err(Error::Precondition(format!(
                "{} colours for {} edges",
                colour.len(),
                g.size()
            )));
        }
        Ok(EdgeColouring { colour })
    }

    pub fn of(&self, id: usize) -> usize {
        self.colour[id]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colour
    }

    /// Number of distinct colours.
    pub fn count(&self) -> usize {
        let mut c = self.colour.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Largest number of same-coloured edges at one vertex.
    pub fn max_colour_degree(&self, g: &Graph) -> usize {
        g.vertices()
            .map(|v| {
                let mut cs: Vec<usize> = g
                    .incident_edges(v)
                    .into_iter()
                    .map(|id| self.colour[id])
                    .collect();
                cs.sort_unstable();
                cs.chunk_by(|a, b| a == b)
                    .map(<[usize]>::len)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }
}

/// Colour the two base edges behind matching edge `i` with colour `i`, so
/// each colour class is one `P3` of the induced decomposition.
pub fn colouring_from_matching(lgm: &LineGraphMap, m: &Matching) -> Result<EdgeColouring> {
    m.require_perfect(lgm.lg())?;
    let mut colour = vec![0; lgm.base().size()];
    for (i, &(x, y)) in m.edges().iter().enumerate() {
        colour[x] = i;
        colour[y] = i;
    }
    let c = EdgeColouring { colour };
    debug_assert!(c.max_colour_degree(lgm.base()) <= 2);
    Ok(c)
}

struct PcSearch<'a> {
    g: &'a Graph,
    c: &'a EdgeColouring,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    meter: &'a mut Meter,
    count_only: bool,
    found: u64,
}

impl PcSearch<'_> {
    fn colour(&self, u: Vertex, v: Vertex) -> usize {
        self.c.of(self.g.edge_index(u, v).unwrap())
    }

    fn grow(&mut self) -> Result<bool> {
        self.meter.tick()?;
        let g = self.g;
        let cur = *self.path.last().unwrap();
        let last = (self.path.len() >= 2).then(|| self.colour(self.path[self.path.len() - 2], cur));
        if self.path.len() == g.order() {
            let first = self.colour(self.path[0], self.path[1]);
            if g.has_edge(cur, self.path[0]) {
                let close = self.colour(cur, self.path[0]);
                if Some(close) != last && close != first {
                    self.found += 1;
                    return Ok(!self.count_only);
                }
            }
            return Ok(false);
        }
        if !self.connected(cur) {
            return Ok(false);
        }
        let mut options: Vec<(usize, Vertex)> = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| !self.visited[w] && Some(self.colour(cur, w)) != last)
            .map(|w| {
                let into = self.colour(cur, w);
                let onward = g
                    .neighbors(w)
                    .iter()
                    .filter(|&&y| !self.visited[y] && y != w && self.colour(w, y) != into)
                    .count();
                (usize::MAX - onward, w)
            })
            .collect();
        options.sort_unstable();
        for (_, w) in options {
            self.visited[w] = true;
            self.path.push(w);
            if self.grow()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[w] = false;
        }
        Ok(false)
    }

    /// Unvisited vertices reachable from `cur` through unvisited vertices,
    /// with one of them adjacent to the start.
    fn connected(&self, cur: Vertex) -> bool {
        let g = self.g;
        let remaining = g.order() - self.path.len();
        let mut seen = vec![false; g.order()];
        let mut stack = vec![cur];
        let mut reached = 0;
        let mut closes = false;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] && !self.visited[w] {
                    seen[w] = true;
                    reached += 1;
                    closes |= g.has_edge(w, self.path[0]);
                    stack.push(w);
                }
            }
        }
        reached == remaining && closes
    }
}

fn pc_search<'a>(
    g: &'a Graph,
    c: &'a EdgeColouring,
    meter: &'a mut Meter,
    count_only: bool,
) -> Result<(u64, Vec<Vertex>)> {
    if c.as_slice().len() != g.size() {
        return Err(Error::Precondition(
            "colouring does not match the graph".into(),
        ));
    }
    if g.order() < 3 {
        return Ok((0, Vec::new()));
    }
    let mut visited = vec![false; g.order()];
    visited[0] = true;
    let mut s = PcSearch {
        g,
        c,
        visited,
        path: vec![0],
        meter,
        count_only,
        found: 0,
    };
    s.grow()?;
    Ok((s.found, s.path))
}

/// A Hamiltonian cycle of `g` with no two consecutive edges (cyclically)
/// of the same colour.
pub fn find_pc_hamiltonian_cycle(
    g: &Graph,
    c: &EdgeColouring,
    meter: &mut Meter,
) -> Result<Option<CycleWalk>> {
    let (found, path) = pc_search(g, c, meter, false)?;
    Ok((found > 0).then(|| CycleWalk::close(g, path)))
}

/// Number of properly coloured Hamiltonian cycles, each counted once.
pub fn count_pc_hamiltonian_cycles(g: &Graph, c: &EdgeColouring, meter: &mut Meter) -> Result<u64> {
    Ok(pc_search(g, c, meter, true)?.0 / 2)
}

/// A path inside clique `q` from `entry` to `exit` that alternates between
/// non-matching and matching edges and uses every edge of `m_i`.
///
/// Matching edges are taken in ascending order, except that the edge at
/// `entry` goes first and the edge at `exit` goes last.
pub fn stitch_clique_path(
    q: &Clique,
    entry: Vertex,
    exit: Vertex,
    m_i: &[Edge],
) -> Result<Vec<Vertex>> {
    if entry == exit {
        return Err(Error::Precondition("entry and exit coincide".into()));
    }
    for &x in [entry, exit]
        .iter()
        .chain(m_i.iter().flat_map(|(a, b)| [a, b]))
    {
        if !q.contains(x) {
            return Err(Error::Precondition(format!(
                "vertex {x} is not in the clique of {}",
                q.center
            )));
        }
    }
    let mut sorted: Vec<Edge> = m_i.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    sorted.sort_unstable();
    if sorted.contains(&(entry.min(exit), entry.max(exit))) {
        return Err(Error::Precondition(
            "the entry-exit edge is a matching edge".into(),
        ));
    }
    let at = |x: Vertex| sorted.iter().position(|&(a, b)| a == x || b == x);
    let head = at(entry);
    let tail = at(exit);
    let mut path = vec![entry];
    if let Some(i) = head {
        let (a, b) = sorted[i];
        path.push(if a == entry { b } else { a });
    }
    for (i, &(a, b)) in sorted.iter().enumerate() {
        if Some(i) != head && Some(i) != tail {
            path.extend([a, b]);
        }
    }
    if let Some(i) = tail {
        let (a, b) = sorted[i];
        path.push(if a == exit { b } else { a });
    }
    path.push(exit);
    Ok(path)
}

/// Extend `m` by walking a properly coloured Hamiltonian cycle of the base
/// graph under the matching colouring and crossing each clique with
/// [`stitch_clique_path`]. `None` when no such cycle exists.
pub fn extend_via_pc_cycle(
    lgm: &LineGraphMap,
    m: &Matching,
    meter: &mut Meter,
) -> Result<Option<CycleWalk>> {
    let base = lgm.base();
    let colouring = colouring_from_matching(lgm, m)?;
    let Some(h) = find_pc_hamiltonian_cycle(base, &colouring, meter)? else {
        return Ok(None);
    };
    let cyc = h.cyclic();
    let k = cyc.len();
    let mut inside: Vec<Vec<Edge>> = vec![Vec::new(); base.order()];
    for &(x, y) in m.edges() {
        inside[lgm
            .shared_endpoint(x, y)
            .expect("matching edges lie in a clique")]
        .push((x, y));
    }
    let mut seq = Vec::with_capacity(base.size());
    for i in 0..k {
        let v = cyc[i];
        let entry = lgm.to_lg(cyc[(i + k - 1) % k], v).unwrap();
        let exit = lgm.to_lg(v, cyc[(i + 1) % k]).unwrap();
        let q = Clique {
            center: v,
            members: base.incident_edges(v),
        };
        let mut piece = stitch_clique_path(&q, entry, exit, &inside[v])?;
        piece.pop();
        seq.extend(piece);
    }
    certify(lgm.lg(), seq, m, "the properly coloured cycle extension").map(Some)
}

/// Hamiltonian cycle of `L(K_n)` through `m`, for `n ≡ 0, 1 (mod 4)`.
pub fn extend_matching_complete(n: usize, m: &Matching, meter: &mut Meter) -> Result<CycleWalk> {
    if n % 4 == 2 || n % 4 == 3 {
        return Err(Error::Parity(format!(
            "K_{n} has {} edges, an odd number",
            n * (n - 1) / 2
        )));
    }
    if n < 4 {
        return Err(Error::Precondition(format!(
            "K_{n} has no line graph with a perfect matching"
        )));
    }
    let lgm = build_line_graph(&make_named_graph("complete", &[n])?)?;
    let found = if n == 4 {
        extend_matching_subcubic(&lgm, m, meter)?
    } else {
        extend_via_pc_cycle(&lgm, m, meter)?
    };
    found.ok_or_else(|| Error::Construction(format!("no extension found in L(K_{n})")))
}

/// Hamiltonian cycle of `L(K_{k,k})` through `m`, or `None` when no
/// properly coloured Hamiltonian cycle of `K_{k,k}` exists for the
/// colouring. Success is guaranteed only for large `k`, so `None` is an
/// inconclusive outcome, not a proof that `m` does not extend.
pub fn extend_matching_bipartite(
    k: usize,
    m: &Matching,
    meter: &mut Meter,
) -> Result<Option<CycleWalk>> {
    if k % 2 == 1 {
        return Err(Error::Parity(format!(
            "K_{{{k},{k}}} has {} edges, an odd number",
            k * k
        )));
    }
    if k == 0 {
        return Err(Error::Precondition("K_{0,0} has no edges".into()));
    }
    let lgm = build_line_graph(&make_named_graph("bipartite", &[k])?)?;
    if k <= 3 {
        return extend_matching_subcubic(&lgm, m, meter);
    }
    extend_via_pc_cycle(&lgm, m, meter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_perfect_matchings;
    use crate::verify::check_hamiltonian_containing;

    fn lgm(name: &str, p: &[usize]) -> LineGraphMap {
        build_line_graph(&make_named_graph(name, p).unwrap()).unwrap()
    }

    #[test]
    fn matching_colourings() {
        for (l, colours) in [
            (lgm("complete", &[5]), 5),
            (lgm("cycle", &[6]), 3),
            (lgm("complete", &[4]), 3),
        ] {
            for m in enumerate_perfect_matchings(l.lg()).take(20) {
                let c = colouring_from_matching(&l, &m).unwrap();
                assert_eq!(c.count(), colours);
                assert!(c.max_colour_degree(l.base()) <= 2);
                for i in 0..colours {
                    let class: Vec<usize> =
                        (0..l.base().size()).filter(|&id| c.of(id) == i).collect();
                    assert_eq!(class.len(), 2);
                    assert!(l.shared_endpoint(class[0], class[1]).is_some());
                }
            }
        }
        let l = lgm("cycle", &[6]);
        assert!(colouring_from_matching(&l, &Matching::new([(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn pc_cycles() {
        let k5 = make_named_graph("complete", &[5]).unwrap();
        let rainbow = EdgeColouring::new(&k5, (0..10).collect()).unwrap();
        assert_eq!(
            count_pc_hamiltonian_cycles(&k5, &rainbow, &mut Meter::unlimited()).unwrap(),
            12
        );
        let c4 = make_named_graph("cycle", &[4]).unwrap();
        let mono = EdgeColouring::new(&c4, vec![0; 4]).unwrap();
        assert!(
            find_pc_hamiltonian_cycle(&c4, &mono, &mut Meter::unlimited())
                .unwrap()
                .is_none()
        );
        let alt = EdgeColouring::new(&c4, vec![0, 1, 1, 0]).unwrap();
        // Edges (0,1), (0,3), (1,2), (2,3): the cycle alternates colours.
        let h = find_pc_hamiltonian_cycle(&c4, &alt, &mut Meter::unlimited())
            .unwrap()
            .unwrap();
        assert!(h.kind().hamiltonian);
    }

    #[test]
    fn stitching() {
        let q = Clique {
            center: 0,
            members: (0..8).collect(),
        };
        assert_eq!(stitch_clique_path(&q, 0, 1, &[]).unwrap(), vec![0, 1]);
        assert_eq!(
            stitch_clique_path(&q, 0, 1, &[(3, 2)]).unwrap(),
            vec![0, 2, 3, 1]
        );
        assert_eq!(
            stitch_clique_path(&q, 0, 1, &[(0, 4), (5, 1), (2, 3)]).unwrap(),
            vec![0, 4, 2, 3, 5, 1]
        );
        assert_eq!(
            stitch_clique_path(&q, 7, 2, &[(2, 0), (5, 7), (1, 3)]).unwrap(),
            vec![7, 5, 1, 3, 0, 2]
        );
        assert!(matches!(
            stitch_clique_path(&q, 0, 1, &[(1, 0)]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            stitch_clique_path(&q, 0, 9, &[]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn complete_graphs() {
        let l5 = lgm("complete", &[5]);
        for m in enumerate_perfect_matchings(l5.lg()) {
            let h = extend_matching_complete(5, &m, &mut Meter::unlimited()).unwrap();
            check_hamiltonian_containing(l5.lg(), h.vertices(), m.edges()).unwrap();
        }
        let l4 = lgm("complete", &[4]);
        for m in enumerate_perfect_matchings(l4.lg()) {
            let h = extend_matching_complete(4, &m, &mut Meter::unlimited()).unwrap();
            check_hamiltonian_containing(l4.lg(), h.vertices(), m.edges()).unwrap();
        }
        let l8 = lgm("complete", &[8]);
        for m in enumerate_perfect_matchings(l8.lg()).step_by(9973).take(10) {
            let h = extend_matching_complete(8, &m, &mut Meter::unlimited()).unwrap();
            check_hamiltonian_containing(l8.lg(), h.vertices(), m.edges()).unwrap();
        }
        let any = Matching::new([]).unwrap();
        assert!(matches!(
            extend_matching_complete(6, &any, &mut Meter::unlimited()),
            Err(Error::Parity(_))
        ));
        assert!(matches!(
            extend_matching_complete(7, &any, &mut Meter::unlimited()),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn bipartite() {
        let l2 = lgm("bipartite", &[2]);
        for m in enumerate_perfect_matchings(l2.lg()) {
            let h = extend_matching_bipartite(2, &m, &mut Meter::unlimited())
                .unwrap()
                .unwrap();
            check_hamiltonian_containing(l2.lg(), h.vertices(), m.edges()).unwrap();
        }
        let l4 = lgm("bipartite", &[4]);
        for m in enumerate_perfect_matchings(l4.lg()).step_by(101).take(20) {
            if let Some(h) = extend_matching_bipartite(4, &m, &mut Meter::unlimited()).unwrap() {
                check_hamiltonian_containing(l4.lg(), h.vertices(), m.edges()).unwrap();
            }
        }
        let any = Matching::new([]).unwrap();
        assert!(matches!(
            extend_matching_bipartite(3, &any, &mut Meter::unlimited()),
            Err(Error::Parity(_))
        ));
    }
}
