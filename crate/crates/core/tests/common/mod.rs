//! Brute-force oracles shared by the integration tests. None of them uses
//! the library's search code; they walk every ordering or subset directly.

#![allow(dead_code)]

use pmh::{Edge, Graph};

fn key(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// Every Hamiltonian cycle of `g` as a vertex order starting at 0, each
/// cycle listed in both directions.
fn each_hamiltonian_order(g: &Graph, visit: &mut dyn FnMut(&[usize])) {
    fn rec(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize])) {
        let n = g.order();
        if path.len() == n {
            if g.has_edge(path[n - 1], path[0]) {
                visit(path);
            }
            return;
        }
        for w in 0..n {
            if !used[w] && g.has_edge(*path.last().unwrap(), w) {
                used[w] = true;
                path.push(w);
                rec(g, path, used, visit);
                path.pop();
                used[w] = false;
            }
        }
    }
    if g.order() < 3 {
        return;
    }
    let mut used = vec![false; g.order()];
    used[0] = true;
    rec(g, &mut vec![0], &mut used, visit);
}

pub fn count_hamiltonian_cycles(g: &Graph) -> u64 {
    let mut c = 0;
    each_hamiltonian_order(g, &mut |_| c += 1);
    c / 2
}

/// Whether some Hamiltonian cycle of `g` uses every edge of `required`.
pub fn hamiltonian_through(g: &Graph, required: &[Edge]) -> bool {
    let mut found = false;
    each_hamiltonian_order(g, &mut |p| {
        if found {
            return;
        }
        let n = p.len();
        let used: Vec<Edge> = (0..n).map(|i| key(p[i], p[(i + 1) % n])).collect();
        found = required.iter().all(|&(u, v)| used.contains(&key(u, v)));
    });
    found
}

/// Hamiltonian cycles with no two cyclically consecutive edges of the
/// same colour, counted once each.
pub fn count_pc_cycles(g: &Graph, colour: impl Fn(usize, usize) -> usize) -> u64 {
    let mut c = 0;
    each_hamiltonian_order(g, &mut |p| {
        let n = p.len();
        let cs: Vec<usize> = (0..n).map(|i| colour(p[i], p[(i + 1) % n])).collect();
        if (0..n).all(|i| cs[i] != cs[(i + 1) % n]) {
            c += 1;
        }
    });
    c / 2
}

/// Number of perfect matchings, by pairing the lowest free vertex with
/// each free neighbour in turn.
pub fn count_perfect_matchings(g: &Graph) -> u64 {
    fn rec(g: &Graph, free: &mut [bool]) -> u64 {
        let Some(u) = free.iter().position(|&f| f) else {
            return 1;
        };
        free[u] = false;
        let mut total = 0;
        for w in 0..g.order() {
            if free[w] && g.has_edge(u, w) {
                free[w] = false;
                total += rec(g, free);
                free[w] = true;
            }
        }
        free[u] = true;
        total
    }
    if g.order() % 2 == 1 {
        return 0;
    }
    rec(g, &mut vec![true; g.order()])
}

/// The flower snark J5: centres a_i, a 5-cycle on the b_i, and the
/// 10-cycle c_0 .. c_4 d_0 .. d_4.
pub fn flower_snark_j5() -> Graph {
    let (a, b, c, d) = (0, 5, 10, 15);
    let mut e = Vec::new();
    for i in 0..5 {
        e.extend([
            (a + i, b + i),
            (a + i, c + i),
            (a + i, d + i),
            (b + i, b + (i + 1) % 5),
        ]);
    }
    for k in 0..10 {
        e.push((c + k, c + (k + 1) % 10));
    }
    Graph::new(20, e).unwrap()
}

/// Two 4-cycles sharing vertex 0.
pub fn two_squares() -> Graph {
    Graph::new(
        7,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (4, 5),
            (5, 6),
            (6, 0),
        ],
    )
    .unwrap()
}
