//! Isomorph-free enumeration of small graphs.
//!
//! Graphs on `n` vertices are grown from the canonical representatives on
//! `n - 1` vertices by adding a vertex with every possible neighbourhood,
//! then deduplicated by canonical form. Every graph on `n` vertices arises
//! this way (delete any vertex), so the enumeration is complete. Canonical
//! forms come from individualisation-refinement without automorphism
//! pruning, which is fine up to about 10 vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order [`all_graphs`] accepts.
pub const MAX_GENERATED_ORDER: usize = 10;

/// Filters applied while growing; both are hereditary for induced
/// subgraphs, so pruning the parents is safe.
#[derive(Debug, Clone, Copy, Default)]
pub struct GenOptions {
    pub max_degree: Option<usize>,
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// in canonical form, sorted by canonical code.
pub fn all_graphs(n: usize, opts: GenOptions) -> Result<Vec<Graph>> {
    if n > MAX_GENERATED_ORDER {
        return Err(Error::Capacity(format!(
            "exhaustive generation is limited to {MAX_GENERATED_ORDER} vertices"
        )));
    }
    let mut layer: Vec<Vec<u16>> = vec![vec![]];
    for k in 1..=n {
        let mut next: BTreeSet<Vec<u16>> = BTreeSet::new();
        for rows in &layer {
            for mask in 0u32..(1 << (k - 1)) {
                let mut grown: Vec<u16> = rows.clone();
                for (v, row) in grown.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                grown.push(mask as u16);
                if let Some(cap) = opts.max_degree {
                    if grown.iter().any(|r| r.count_ones() as usize > cap) {
                        continue;
                    }
                }
                next.insert(canonical_rows(&grown));
            }
        }
        layer = next.into_iter().collect();
    }
    Ok(layer.iter().map(|rows| rows_to_graph(rows)).collect())
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize, opts: GenOptions) -> Result<Vec<Graph>> {
    Ok(all_graphs(n, opts)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Canonical relabelling of `g` (order at most 16).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    if g.order() > 16 {
        return Err(Error::Capacity(
            "canonical form limited to 16 vertices".into(),
        ));
    }
    Ok(rows_to_graph(&canonical_rows(&graph_to_rows(g))))
}

fn graph_to_rows(g: &Graph) -> Vec<u16> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u16, |r, &w| r | 1 << w))
        .collect()
}

fn rows_to_graph(rows: &[u16]) -> Graph {
    let n = rows.len();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| rows[u] >> v & 1 == 1)
            .map(move |v| (u, v))
    });
    Graph::new(n, edges).expect("rows describe a simple graph")
}

/// Ordered partition refinement to an equitable partition.
fn refine(rows: &[u16], cells: &mut Vec<u16>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() == 1 {
                i += 1;
                continue;
            }
            // Split `cell` by the vector of neighbour counts into each cell.
            let mut keyed: Vec<(Vec<u32>, usize)> = Vec::new();
            for v in bits(cell) {
                let key: Vec<u32> = cells.iter().map(|&c| (rows[v] & c).count_ones()).collect();
                keyed.push((key, v));
            }
            keyed.sort();
            let mut parts: Vec<u16> = Vec::new();
            let mut last: Option<&Vec<u32>> = None;
            for (key, v) in &keyed {
                if last != Some(key) {
                    parts.push(0);
                    last = Some(key);
                }
                *parts.last_mut().unwrap() |= 1 << v;
            }
            if parts.len() > 1 {
                cells.splice(i..=i, parts);
                changed = true;
                break;
            }
            i += 1;
        }
    }
}

fn bits(mut x: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}

/// The relabelled adjacency rows that are lexicographically largest among
/// all leaves of the refinement tree.
fn canonical_rows(rows: &[u16]) -> Vec<u16> {
    let n = rows.len();
    if n == 0 {
        return Vec::new();
    }
    // Initial partition by degree.
    let mut by_degree: Vec<(u32, usize)> = (0..n).map(|v| (rows[v].count_ones(), v)).collect();
    by_degree.sort();
    let mut cells: Vec<u16> = Vec::new();
    let mut last = None;
    for (d, v) in by_degree {
        if last != Some(d) {
            cells.push(0);
            last = Some(d);
        }
        *cells.last_mut().unwrap() |= 1 << v;
    }
    let mut best: Option<Vec<u16>> = None;
    search(rows, cells, &mut best);
    best.unwrap()
}

fn search(rows: &[u16], mut cells: Vec<u16>, best: &mut Option<Vec<u16>>) {
    refine(rows, &mut cells);
    match cells.iter().position(|c| c.count_ones() > 1) {
        None => {
            // Discrete: cell order is the new labelling.
            let old: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let mut new_of = vec![0usize; rows.len()];
            for (new, &o) in old.iter().enumerate() {
                new_of[o] = new;
            }
            let code: Vec<u16> = old
                .iter()
                .map(|&o| bits(rows[o]).fold(0u16, |r, w| r | 1 << new_of[w]))
                .collect();
            if best.as_ref().is_none_or(|b| code > *b) {
                *best = Some(code);
            }
        }
        Some(i) => {
            for v in bits(cells[i]) {
                let mut child = cells.clone();
                child.splice(i..=i, [1u16 << v, cells[i] & !(1 << v)]);
                search(rows, child, best);
            }
        }
    }
}
