use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Generator tags accepted by [`make_named_graph`].
pub const NAMED_GRAPHS: &[&str] = &[
    "complete",
    "bipartite",
    "cycle",
    "path",
    "star",
    "petersen",
    "prism",
    "cube",
    "bowtie",
    "octahedron",
];

/// Canonical labelled members of the named families.
///
/// | tag | params | labelling |
/// |---|---|---|
/// | `complete` | `[n]` | `K_n` |
/// | `bipartite` | `[m]` or `[m, k]` | sides `0..m` and `m..m+k` |
/// | `cycle` | `[n]`, `n >= 3` | `0-1-...-(n-1)-0` |
/// | `path` | `[n]` | `0-1-...-(n-1)` |
/// | `star` | `[k]` | hub `0`, leaves `1..=k` |
/// | `petersen` | `[]` | Kneser graph on the 2-subsets of `{0..4}` in lexicographic order |
/// | `prism` | `[]` or `[k]` | triangles (or `k`-gons) `0..k` and `k..2k`, rungs `i - (i+k)` |
/// | `cube` | `[]` | `Q3` on 3-bit labels |
/// | `bowtie` | `[]` | centre `0`, triangles `{0,1,2}` and `{0,3,4}` |
/// | `octahedron` | `[]` | `K_{2,2,2}` with antipodal pairs `{0,1}`, `{2,3}`, `{4,5}` |
pub fn make_named_graph(name: &str, params: &[usize]) -> Result<Graph> {
    let arity = |want: &[usize]| -> Result<()> {
        if want.contains(&params.len()) {
            Ok(())
        } else {
            Err(Error::Parameter(format!(
                "`{name}` takes {want:?} parameters, got {}",
                params.len()
            )))
        }
    };
    let positive = |k: usize, what: &str| -> Result<usize> {
        if k == 0 {
            Err(Error::Parameter(format!("{what} must be at least 1")))
        } else {
            Ok(k)
        }
    };
    match name {
        "complete" => {
            arity(&[1])?;
            let n = positive(params[0], "n")?;
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        "bipartite" => {
            arity(&[1, 2])?;
            let m = positive(params[0], "m")?;
            let k = positive(*params.get(1).unwrap_or(&m), "k")?;
            Graph::new(m + k, (0..m).flat_map(|u| (m..m + k).map(move |v| (u, v))))
        }
        "cycle" => {
            arity(&[1])?;
            let n = params[0];
            if n < 3 {
                return Err(Error::Parameter("a cycle needs at least 3 vertices".into()));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        "path" => {
            arity(&[1])?;
            let n = positive(params[0], "n")?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        "star" => {
            arity(&[1])?;
            let k = positive(params[0], "k")?;
            Graph::new(k + 1, (1..=k).map(|i| (0, i)))
        }
        "petersen" => {
            arity(&[0])?;
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
                .collect();
            let mut edges = Vec::new();
            for (i, p) in pairs.iter().enumerate() {
                for (j, q) in pairs.iter().enumerate().skip(i + 1) {
                    if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(10, edges)
        }
        "prism" => {
            arity(&[0, 1])?;
            let k = *params.first().unwrap_or(&3);
            if k < 3 {
                return Err(Error::Parameter("a prism needs k >= 3".into()));
            }
            let mut edges: Vec<Edge> = Vec::new();
            for i in 0..k {
                edges.push((i, (i + 1) % k));
                edges.push((k + i, k + (i + 1) % k));
                edges.push((i, k + i));
            }
            Graph::new(2 * k, edges)
        }
        "cube" => {
            arity(&[0])?;
            Graph::new(
                8,
                (0..8usize)
                    .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
                    .filter(|&(u, v)| u < v),
            )
        }
        "bowtie" => {
            arity(&[0])?;
            Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        }
        "octahedron" => {
            arity(&[0])?;
            Graph::new(
                6,
                (0..6)
                    .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                    .filter(|&(u, v)| u / 2 != v / 2),
            )
        }
        other => Err(Error::UnknownGenerator(other.to_string())),
    }
}
