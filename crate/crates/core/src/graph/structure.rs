use super::{Edge, Graph, Vertex};
use crate::error::{Error, Result};

impl Graph {
    /// Connected components as ascending vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.order()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Connected, and non-empty.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Structure("graph is not connected".into()))
        }
    }

    /// A proper 2-colouring (`false`/`true` sides), if one exists. Each
    /// component's smallest vertex gets `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for &w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Whether the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }

    /// The cut edges of a connected graph, in dense-id order.
    pub fn bridges(&self) -> Result<Vec<Edge>> {
        self.require_connected()?;
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = Vec::new();
        let mut time = 0;
        // Iterative DFS: (vertex, parent edge id, next neighbour index).
        let mut stack: Vec<(Vertex, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = 0;
        low[0] = 0;
        time += 1;
        while let Some(&mut (u, via, ref mut next)) = stack.last_mut() {
            if let Some(&w) = self.neighbors(u).get(*next) {
                *next += 1;
                let id = self.edge_index(u, w).unwrap();
                if id == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, id, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.push(self.edge(via));
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named_graph;

    // Removal oracle: an edge is a bridge iff deleting it disconnects.
    fn bridges_by_removal(g: &Graph) -> Vec<Edge> {
        g.edges()
            .iter()
            .copied()
            .filter(|&e| !g.remove_edges(&[e]).is_connected())
            .collect()
    }

    #[test]
    fn named_examples() {
        let p4 = make_named_graph("path", &[4]).unwrap();
        assert_eq!(p4.bridges().unwrap(), p4.edges().to_vec());
        assert!(make_named_graph("cycle", &[6])
            .unwrap()
            .bridges()
            .unwrap()
            .is_empty());
        assert!(make_named_graph("bowtie", &[])
            .unwrap()
            .bridges()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn matches_removal_oracle() {
        let graphs = [
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap(),
            Graph::new(
                7,
                [
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (3, 5),
                    (5, 6),
                    (6, 3),
                ],
            )
            .unwrap(),
            make_named_graph("petersen", &[]).unwrap(),
            make_named_graph("star", &[4]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(g.bridges().unwrap(), bridges_by_removal(g), "{g:?}");
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.bridges(), Err(Error::Structure(_))));
    }

    #[test]
    fn bipartite_sides() {
        assert!(make_named_graph("cycle", &[5])
            .unwrap()
            .bipartition()
            .is_none());
        let sides = make_named_graph("bipartite", &[2, 3])
            .unwrap()
            .bipartition()
            .unwrap();
        assert_eq!(sides, vec![false, false, true, true, true]);
    }
}
