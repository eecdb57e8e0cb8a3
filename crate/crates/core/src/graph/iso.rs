//! Labelled isomorphism by backtracking.
//!
//! Vertices of both graphs are first coloured by iterated degree refinement
//! on the disjoint union, so colours are comparable across the two graphs.
//! The search then maps vertices of the first graph in BFS order onto
//! same-coloured, adjacency-consistent vertices of the second.

use std::collections::HashMap;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub const DEFAULT_ISO_BOUND: usize = 64;

/// Whether `g1` and `g2` are isomorphic. Both must have at most
/// [`DEFAULT_ISO_BOUND`] vertices.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(isomorphism(g1, g2, DEFAULT_ISO_BOUND)?.is_some())
}

/// An isomorphism witness: `map[v]` is the image in `g2` of vertex `v` of
/// `g1`. `None` when the graphs are not isomorphic.
pub fn isomorphism(g1: &Graph, g2: &Graph, bound: usize) -> Result<Option<Vec<Vertex>>> {
    for g in [g1, g2] {
        if g.order() > bound {
            return Err(Error::Capacity(format!(
                "isomorphism test limited to {bound} vertices, got {}",
                g.order()
            )));
        }
    }
    let n = g1.order();
    if n != g2.order() || g1.size() != g2.size() {
        return Ok(None);
    }
    let (c1, c2) = joint_colours(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    let order = search_order(g1, &c1);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[Vertex],
    depth: usize,
    map: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..g2.order() {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Colour refinement run on both graphs at once.
fn joint_colours(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n1 = g1.order();
    let total = n1 + g2.order();
    let neighbours = |x: usize| -> Vec<usize> {
        if x < n1 {
            g1.neighbors(x).to_vec()
        } else {
            g2.neighbors(x - n1).iter().map(|&w| w + n1).collect()
        }
    };
    let mut colour: Vec<usize> = (0..total).map(|x| neighbours(x).len()).collect();
    let mut classes = distinct(&colour);
    loop {
        let mut table: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut signatures: Vec<(usize, Vec<usize>)> = (0..total)
            .map(|x| {
                let mut s: Vec<usize> = neighbours(x).iter().map(|&w| colour[w]).collect();
                s.sort_unstable();
                (colour[x], s)
            })
            .collect();
        // Number colours in sorted signature order so both graphs agree.
        let mut keys = signatures.clone();
        keys.sort();
        keys.dedup();
        for (i, k) in keys.into_iter().enumerate() {
            table.insert(k, i);
        }
        let next: Vec<usize> = signatures.drain(..).map(|s| table[&s]).collect();
        let count = distinct(&next);
        colour = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let c2 = colour.split_off(n1);
    (colour, c2)
}

fn distinct(xs: &[usize]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// BFS from the vertex with the rarest colour; keeps every newly mapped
/// vertex adjacent to something already mapped where possible.
fn search_order(g: &Graph, colour: &[usize]) -> Vec<Vertex> {
    let n = g.order();
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in colour {
        *freq.entry(c).or_default() += 1;
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !seen[v])
            .min_by_key(|&v| (freq[&colour[v]], v))
            .unwrap();
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut next: Vec<Vertex> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| !seen[w])
                .collect();
            next.sort_by_key(|&w| (freq[&colour[w]], w));
            for w in next {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}
