use crate::error::{Error, Result};
use crate::graph::Graph;

/// Degree-sum condition for balanced bipartite graphs: every non-adjacent
/// pair across the sides has `deg(u) + deg(v) >= n/2 + 1`.
///
/// The graph must be connected so that its sides are determined.
pub fn lasvergnas_condition(g: &Graph) -> Result<bool> {
    let n = g.order();
    if !g.is_connected() {
        return Err(Error::Shape(
            "a disconnected graph has no unique bipartition".into(),
        ));
    }
    let side = g
        .bipartition()
        .ok_or_else(|| Error::Shape("graph is not bipartite".into()))?;
    let left = side.iter().filter(|&&s| s).count();
    if 2 * left != n || n < 4 {
        return Err(Error::Shape(format!(
            "sides of sizes {left} and {} are not equal and at least 2",
            n - left
        )));
    }
    let half = n / 2;
    for u in g.vertices().filter(|&u| side[u]) {
        for v in g.vertices().filter(|&v| !side[v]) {
            if !g.has_edge(u, v) && g.degree(u) + g.degree(v) < half + 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Degree-sum condition for graphs of even order at least 4: every
/// non-adjacent pair has `deg(u) + deg(v) >= n + 1`.
pub fn haggkvist_condition(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n % 2 == 1 || n < 4 {
        return Err(Error::Shape(format!(
            "order {n} is not even and at least 4"
        )));
    }
    for u in g.vertices() {
        for v in u + 1..n {
            if !g.has_edge(u, v) && g.degree(u) + g.degree(v) < n + 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
