use super::certify;
use crate::budget::Meter;
use crate::cycles::{find_dominating_cycle, find_hamiltonian_cycle, CycleWalk};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::line_graph::LineGraphMap;
use crate::matching::Matching;

fn require_subcubic(base: &Graph) -> Result<()> {
    if base.max_degree() > 3 {
        return Err(Error::Precondition(format!(
            "the dominating-cycle extension needs maximum degree at most 3, got {}",
            base.max_degree()
        )));
    }
    Ok(())
}

/// The matching edge of `L(G)` inside clique `Q_v`, if any.
fn matched_in(lgm: &LineGraphMap, mate: &[Option<Vertex>], v: Vertex) -> Option<Edge> {
    let base = lgm.base();
    base.incident_edges(v).into_iter().find_map(|x| {
        let y = mate[x]?;
        (lgm.shared_endpoint(x, y) == Some(v)).then_some((x.min(y), x.max(y)))
    })
}

/// Turn a dominating cycle `d` of a subcubic base graph into a Hamiltonian
/// cycle of `L(G)` through `m`.
///
/// The cycle enters and leaves each clique `Q_v` with `v` on `d` through
/// the line-graph vertices of the two `d`-edges at `v`. A clique holding a
/// matching edge is crossed along that edge, picking up the third vertex
/// if the edge uses it; a clique without one is crossed directly. Cliques
/// of untouched vertices are skipped, which needs them to be free of `m`.
pub fn extend_via_dominating_cycle(
    lgm: &LineGraphMap,
    m: &Matching,
    d: &CycleWalk,
) -> Result<CycleWalk> {
    let base = lgm.base();
    require_subcubic(base)?;
    m.require_perfect(lgm.lg())?;
    let kind = d.kind();
    if !kind.cycle {
        return Err(Error::Precondition(
            "d is not a cycle of the base graph".into(),
        ));
    }
    if !kind.dominating {
        return Err(Error::Precondition("d is not dominating".into()));
    }
    let mate = m.mates(lgm.lg().order());
    let mut on = vec![false; base.order()];
    for &v in d.cyclic() {
        on[v] = true;
    }
    if let Some(v) = base
        .vertices()
        .find(|&v| !on[v] && matched_in(lgm, &mate, v).is_some())
    {
        return Err(Error::Precondition(format!(
            "vertex {v} is untouched by d but its clique meets the matching, so it cannot be skipped"
        )));
    }

    let cyc = d.cyclic();
    let k = cyc.len();
    let mut seq = Vec::with_capacity(base.size());
    for i in 0..k {
        let v = cyc[i];
        let entry = lgm.to_lg(cyc[(i + k - 1) % k], v).unwrap();
        let exit = lgm.to_lg(v, cyc[(i + 1) % k]).unwrap();
        seq.push(entry);
        if let Some((x, y)) = matched_in(lgm, &mate, v) {
            // The matched pair crosses the clique either as entry-exit or
            // through the third vertex.
            let third = [x, y].into_iter().find(|&z| z != entry && z != exit);
            if let Some(z) = third {
                seq.push(z);
            }
        }
    }
    certify(lgm.lg(), seq, m, "the dominating-cycle extension")
}

/// Extend `m` through a dominating cycle whose untouched vertices all have
/// `m`-free cliques (or no clique). For subcubic base graphs such a cycle
/// exists exactly when `m` extends, so `None` certifies that it does not.
pub fn extend_matching_subcubic(
    lgm: &LineGraphMap,
    m: &Matching,
    meter: &mut Meter,
) -> Result<Option<CycleWalk>> {
    let base = lgm.base();
    require_subcubic(base)?;
    m.require_perfect(lgm.lg())?;
    let mate = m.mates(lgm.lg().order());
    let allowed: Vec<Vertex> = base
        .vertices()
        .filter(|&v| matched_in(lgm, &mate, v).is_none())
        .collect();
    match find_dominating_cycle(base, &allowed, meter)? {
        Some(d) => extend_via_dominating_cycle(lgm, m, &d).map(Some),
        None => Ok(None),
    }
}

/// Two edge-disjoint Hamiltonian cycles of `L(G)` covering all its edges,
/// the first through `m`, for a cubic Hamiltonian base graph of even size.
///
/// The first is the extension of `m` along a Hamiltonian cycle of `G`; the
/// second is whatever remains, which is again a single cycle.
pub fn kotzig_partition(
    lgm: &LineGraphMap,
    m: &Matching,
    meter: &mut Meter,
) -> Result<(CycleWalk, CycleWalk)> {
    let base = lgm.base();
    if !base.is_cubic() {
        return Err(Error::Precondition("the base graph must be cubic".into()));
    }
    let h = find_hamiltonian_cycle(base, &[], meter)?
        .ok_or_else(|| Error::Precondition("the base graph is not Hamiltonian".into()))?;
    if base.size() % 2 == 1 {
        return Err(Error::Parity(format!(
            "the base graph has {} edges",
            base.size()
        )));
    }
    m.require_perfect(lgm.lg())?;
    let first = extend_via_dominating_cycle(lgm, m, &h)?;

    let lg = lgm.lg();
    let rest = lg.remove_edges(&first.edges());
    let mut seq = vec![0];
    let mut prev = usize::MAX;
    loop {
        let cur = *seq.last().unwrap();
        let nb = rest.neighbors(cur);
        if nb.len() != 2 {
            return Err(Error::Construction(format!(
                "complement has degree {} at {cur}",
                nb.len()
            )));
        }
        let next = if nb[0] != prev { nb[0] } else { nb[1] };
        if next == 0 {
            break;
        }
        if seq.len() > lg.order() {
            return Err(Error::Construction("complement does not close up".into()));
        }
        prev = cur;
        seq.push(next);
    }
    let second = CycleWalk::close(lg, seq);
    if !second.kind().hamiltonian {
        return Err(Error::Construction(
            "the complement is not a single Hamiltonian cycle".into(),
        ));
    }
    Ok((first, second))
}
