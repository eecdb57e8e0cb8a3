//! Graph surgeries: expanding a degree-3 vertex into a triangle
//! (Y-extension), shrinking such a triangle back (Y-reduction), the
//! near-Hamiltonian non-PMH family built from a hypohamiltonian cubic
//! graph, and the reconstruction of a cubic graph from `L(G) - M`.

use serde::Serialize;

use crate::budget::Meter;
use crate::cycles::is_hypohamiltonian;
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, edge, Edge, Graph, Vertex};
use crate::line_graph::{build_line_graph, canonical_partition, LineGraphMap};
use crate::matching::{find_perfect_matching, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurgeryKind {
    YExtension,
    YReduction,
}

/// Record of one surgery and how vertices moved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Surgery {
    pub kind: SurgeryKind,
    /// The expanded vertex, or the contracted triangle (ascending).
    pub site: Vec<Vertex>,
    /// `after[v]`: the new vertices that old vertex `v` became.
    pub after: Vec<Vec<Vertex>>,
    /// `before[w]`: the old vertex that new vertex `w` came from.
    pub before: Vec<Vertex>,
}

/// Replace degree-3 vertex `v` by a triangle. The neighbours of `v`, in
/// ascending order, attach to `v`, `n` and `n + 1` respectively.
pub fn y_extension(g: &Graph, v: Vertex) -> Result<(Graph, Surgery)> {
    if v >= g.order() {
        return Err(Error::Parameter(format!("vertex {v} out of range")));
    }
    if g.degree(v) != 3 {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {}, not 3",
            g.degree(v)
        )));
    }
    let n = g.order();
    let nb = g.neighbors(v);
    let slot = [v, n, n + 1];
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| a != v && b != v)
        .collect();
    edges.extend(nb.iter().zip(slot).map(|(&x, s)| edge(x, s)));
    edges.extend([(v, n), (v, n + 1), (n, n + 1)]);
    let h = Graph::new(n + 2, edges)?;
    let mut after: Vec<Vec<Vertex>> = (0..n).map(|u| vec![u]).collect();
    after[v] = slot.to_vec();
    let mut before: Vec<Vertex> = (0..n).collect();
    before.extend([v, v]);
    Ok((
        h,
        Surgery {
            kind: SurgeryKind::YExtension,
            site: vec![v],
            after,
            before,
        },
    ))
}

/// Contract triangle `t` to one vertex with id `min(t)`; the remaining
/// vertices keep their relative order.
///
/// Each triangle vertex must have exactly one neighbour outside `t`, and
/// those three neighbours must be distinct so the result stays simple.
pub fn y_reduction(g: &Graph, t: [Vertex; 3]) -> Result<(Graph, Surgery)> {
    let mut t = t;
    t.sort_unstable();
    if t.iter().any(|&x| x >= g.order()) {
        return Err(Error::Parameter("triangle vertex out of range".into()));
    }
    if t[0] == t[1]
        || t[1] == t[2]
        || !g.has_edge(t[0], t[1])
        || !g.has_edge(t[1], t[2])
        || !g.has_edge(t[0], t[2])
    {
        return Err(Error::Precondition(format!("{t:?} is not a triangle")));
    }
    let mut outside = Vec::new();
    for &x in &t {
        let out: Vec<Vertex> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|y| !t.contains(y))
            .collect();
        if out.len() != 1 {
            return Err(Error::Precondition(format!(
                "vertex {x} has {} neighbours outside the triangle",
                out.len()
            )));
        }
        outside.push(out[0]);
    }
    outside.sort_unstable();
    if outside[0] == outside[1] || outside[1] == outside[2] {
        return Err(Error::Precondition(
            "contraction would create parallel edges".into(),
        ));
    }

    let n = g.order();
    let mut new_id = vec![0; n];
    let mut before = Vec::with_capacity(n - 2);
    for (u, id) in new_id.iter_mut().enumerate() {
        if u == t[1] || u == t[2] {
            continue;
        }
        *id = before.len();
        before.push(u);
    }
    new_id[t[1]] = new_id[t[0]];
    new_id[t[2]] = new_id[t[0]];
    let edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| !(t.contains(&a) && t.contains(&b)))
        .map(|&(a, b)| (new_id[a], new_id[b]));
    let h = Graph::new(n - 2, edges)?;
    let after = (0..n).map(|u| vec![new_id[u]]).collect();
    Ok((
        h,
        Surgery {
            kind: SurgeryKind::YReduction,
            site: t.to_vec(),
            after,
            before,
        },
    ))
}

/// The graph obtained by Y-extending every vertex except `keep`.
#[derive(Debug, Clone)]
pub struct Prop6 {
    pub graph: Graph,
    /// `origin[w]`: the vertex of the input graph that `w` came from.
    /// Input vertices keep their ids.
    pub origin: Vec<Vertex>,
    pub keep: Vertex,
}

/// Y-extend every vertex of a hypohamiltonian cubic graph of odd size
/// except `keep`, in ascending order. The result has even size, and its
/// longest cycles miss exactly one vertex.
pub fn prop6_construct(g: &Graph, keep: Vertex, meter: &mut Meter) -> Result<Prop6> {
    if keep >= g.order() {
        return Err(Error::Parameter(format!("vertex {keep} out of range")));
    }
    if !g.is_cubic() {
        return Err(Error::Precondition("input must be cubic".into()));
    }
    if g.size().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "input has {} edges; an odd number is needed",
            g.size()
        )));
    }
    if !is_hypohamiltonian(g, meter)? {
        return Err(Error::Precondition("input is not hypohamiltonian".into()));
    }
    let mut h = g.clone();
    let mut origin: Vec<Vertex> = g.vertices().collect();
    for v in g.vertices().filter(|&v| v != keep) {
        let (next, s) = y_extension(&h, v)?;
        origin = s.before.iter().map(|&w| origin[w]).collect();
        h = next;
    }
    Ok(Prop6 {
        graph: h,
        origin,
        keep,
    })
}

/// A perfect matching of `L(G)` using an edge inside the clique `Q_v`,
/// trying those edges in ascending order.
pub fn matching_meeting_clique(lgm: &LineGraphMap, v: Vertex) -> Result<Option<Matching>> {
    let cp = canonical_partition(lgm);
    let q = cp
        .clique(v)
        .ok_or_else(|| Error::Precondition(format!("vertex {v} has no clique")))?;
    for e in q.edges() {
        if let Some(m) = find_perfect_matching(lgm.lg(), &[e])? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
pub struct Remark1 {
    pub graph: Graph,
    pub isomorphic: bool,
}

/// Delete `m` from `L(G)` and Y-reduce every canonical triangle that `m`
/// misses; for cubic `G` of even size the result is isomorphic to `G`.
pub fn remark1_reduction(g: &Graph, m: &Matching) -> Result<Remark1> {
    if !g.is_cubic() {
        return Err(Error::Precondition("input must be cubic".into()));
    }
    if g.size() % 2 == 1 {
        return Err(Error::Precondition(format!(
            "input has {} edges, so L(G) has no perfect matching",
            g.size()
        )));
    }
    let lgm = build_line_graph(g)?;
    m.require_perfect(lgm.lg())?;
    let mut h = lgm.lg().remove_edges(m.edges());
    // Current id of every line-graph vertex as reductions renumber them.
    let mut at: Vec<Vertex> = lgm.lg().vertices().collect();
    for q in canonical_partition(&lgm).cliques() {
        let free = q.edges().all(|(x, y)| !m.contains(x, y));
        if free {
            let t = [at[q.members[0]], at[q.members[1]], at[q.members[2]]];
            let (next, s) = y_reduction(&h, t)?;
            for id in at.iter_mut() {
                *id = s.after[*id][0];
            }
            h = next;
        }
    }
    let isomorphic = are_isomorphic(&h, g)?;
    Ok(Remark1 {
        graph: h,
        isomorphic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named_graph;
    use crate::matching::enumerate_perfect_matchings;

    fn named(name: &str, p: &[usize]) -> Graph {
        make_named_graph(name, p).unwrap()
    }

    #[test]
    fn extension_and_reduction_are_inverse() {
        let k4 = named("complete", &[4]);
        for v in 0..4 {
            let (p, s) = y_extension(&k4, v).unwrap();
            assert!(are_isomorphic(&p, &named("prism", &[])).unwrap());
            assert_eq!(s.after[v], vec![v, 4, 5]);
            let (back, _) = y_reduction(&p, [v, 4, 5]).unwrap();
            assert!(are_isomorphic(&back, &k4).unwrap());
        }
        for g in [
            named("petersen", &[]),
            named("cube", &[]),
            named("bipartite", &[3]),
        ] {
            for v in g.vertices() {
                let (h, s) = y_extension(&g, v).unwrap();
                assert_eq!((h.order(), h.size()), (g.order() + 2, g.size() + 3));
                assert!(h.is_cubic());
                assert_eq!(h.bridges().unwrap(), vec![]);
                let [a, b, c] = [s.after[v][0], s.after[v][1], s.after[v][2]];
                let (back, _) = y_reduction(&h, [c, a, b]).unwrap();
                assert!(are_isomorphic(&back, &g).unwrap());
            }
        }
    }

    #[test]
    fn surgery_errors() {
        let k4 = named("complete", &[4]);
        assert!(matches!(
            y_reduction(&k4, [0, 1, 2]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            y_extension(&named("cycle", &[5]), 0),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            y_reduction(&named("cube", &[]), [0, 1, 2]),
            Err(Error::Precondition(_))
        ));
        let prism = named("prism", &[]);
        let (k, s) = y_reduction(&prism, [3, 4, 5]).unwrap();
        assert!(are_isomorphic(&k, &k4).unwrap());
        assert_eq!(s.before, vec![0, 1, 2, 3]);
    }

    #[test]
    fn prop6_rejects() {
        assert!(matches!(
            prop6_construct(&named("complete", &[4]), 0, &mut Meter::unlimited()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            prop6_construct(&named("cube", &[]), 0, &mut Meter::unlimited()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn prop6_shape() {
        let p = named("petersen", &[]);
        let r = prop6_construct(&p, 0, &mut Meter::unlimited()).unwrap();
        assert_eq!((r.graph.order(), r.graph.size()), (28, 42));
        assert!(r.graph.is_cubic());
        assert_eq!(r.origin.iter().filter(|&&o| o == 0).count(), 1);
        assert!((1..10).all(|v| r.origin.iter().filter(|&&o| o == v).count() == 3));
        assert_eq!(&r.origin[..10], &(0..10).collect::<Vec<_>>()[..]);
    }

    #[test]
    fn remark1() {
        for g in [named("complete", &[4]), named("cube", &[])] {
            let lgm = build_line_graph(&g).unwrap();
            for m in enumerate_perfect_matchings(lgm.lg()) {
                let r = remark1_reduction(&g, &m).unwrap();
                assert!(r.isomorphic);
                assert_eq!(r.graph.order(), g.order());
            }
        }
        let p = named("petersen", &[]);
        assert!(matches!(
            remark1_reduction(&p, &Matching::new([]).unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
