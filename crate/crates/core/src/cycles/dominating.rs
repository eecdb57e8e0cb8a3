use super::{euler::hierholzer, find_hamiltonian_cycle, CycleWalk};
use crate::budget::Meter;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest cycle-space dimension [`find_dominating_tour`] will enumerate.
pub const MAX_CYCLE_SPACE_DIM: usize = 26;

/// A dominating cycle whose untouched vertices all lie in
/// `allowed_untouched`.
///
/// Candidate untouched sets are tried smallest first, lexicographically
/// within a size. A set `S` works exactly when it is independent (so the
/// rest dominates every edge) and `G - S` is Hamiltonian.
pub fn find_dominating_cycle(
    g: &Graph,
    allowed_untouched: &[Vertex],
    meter: &mut Meter,
) -> Result<Option<CycleWalk>> {
    let mut allowed = allowed_untouched.to_vec();
    allowed.sort_unstable();
    allowed.dedup();
    if let Some(&v) = allowed.iter().find(|&&v| v >= g.order()) {
        return Err(Error::Parameter(format!("vertex {v} out of range")));
    }
    let n = g.order();
    for size in 0..=allowed.len() {
        if n - size < 3 {
            break;
        }
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let untouched: Vec<Vertex> = pick.iter().map(|&i| allowed[i]).collect();
            if g.is_independent(&untouched) {
                let keep: Vec<Vertex> = g
                    .vertices()
                    .filter(|v| untouched.binary_search(v).is_err())
                    .collect();
                let (h, map) = g.induced_subgraph(&keep);
                if let Some(c) = find_hamiltonian_cycle(&h, &[], meter)? {
                    return Ok(Some(c.mapped(g, &map)));
                }
            }
            if !next_combination(&mut pick, allowed.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advance to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A closed trail, possibly a single vertex, that touches an endpoint of
/// every edge.
///
/// Non-trivial tours are exactly the Euler tours of connected even
/// subgraphs, so the search walks the cycle space in Gray-code order and
/// checks each element for connectivity and edge domination.
pub fn find_dominating_tour(g: &Graph) -> Result<Option<CycleWalk>> {
    g.require_connected()?;
    let n = g.order();
    if n > 128 || g.size() > 128 {
        return Err(Error::Capacity(
            "dominating-tour search is limited to 128 vertices and edges".into(),
        ));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == g.size()) {
        return Ok(Some(CycleWalk::trivial(g, v)));
    }

    // Fundamental cycles of a BFS tree, as edge masks.
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut tree = vec![false; g.size()];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                depth[w] = depth[u] + 1;
                tree[g.edge_index(u, w).unwrap()] = true;
                queue.push_back(w);
            }
        }
    }
    let mut basis: Vec<u128> = Vec::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if tree[id] {
            continue;
        }
        let mut mask = 1u128 << id;
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            mask ^= 1u128 << g.edge_index(a, parent[a]).unwrap();
            a = parent[a];
        }
        basis.push(mask);
    }
    if basis.len() > MAX_CYCLE_SPACE_DIM {
        return Err(Error::Capacity(format!(
            "cycle space of dimension {} exceeds the enumeration limit {MAX_CYCLE_SPACE_DIM}",
            basis.len()
        )));
    }

    let ends: Vec<(u128, u128)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u128 << u, 1u128 << v))
        .collect();
    let touched = |mask: u128| -> u128 {
        let mut t = 0u128;
        let mut m = mask;
        while m != 0 {
            let id = m.trailing_zeros() as usize;
            t |= ends[id].0 | ends[id].1;
            m &= m - 1;
        }
        t
    };
    let mut current = 0u128;
    for step in 1u64..(1u64 << basis.len()) {
        current ^= basis[step.trailing_zeros() as usize];
        let on = touched(current);
        if !ends.iter().all(|&(a, b)| on & (a | b) != 0) {
            continue;
        }
        if let Some(walk) = hierholzer(g, current) {
            return Ok(Some(walk));
        }
    }
    Ok(None)
}

pub fn has_dominating_tour(g: &Graph) -> Result<bool> {
    Ok(find_dominating_tour(g)?.is_some())
}
