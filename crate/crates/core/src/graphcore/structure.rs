use std::collections::VecDeque;

use serde::Serialize;

use super::{EdgeSet, Graph};
use crate::error::{Error, Result};

/// Length of a shortest circuit, or `None` for a forest.
///
/// Loops have length 1 and parallel edges length 2. Runs a BFS from every
/// vertex; the first non-tree edge met from root `r` closes a circuit of length
/// `dist[x] + dist[y] + 1`, and the minimum over all roots is exact.
pub fn girth(g: &Graph) -> Option<usize> {
    if g.has_loops() {
        return Some(1);
    }
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent_edge[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &e in g.incident(x) {
                if e == parent_edge[x] {
                    continue;
                }
                let y = g.other(e, x);
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = e;
                    queue.push_back(y);
                } else {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Cut edges, found with Tarjan's low-link on edge indices so that parallel
/// edges are never reported.
pub fn bridges(g: &Graph) -> EdgeSet {
    let n = g.n();
    let mut out = g.empty_edge_set();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    // frames: (vertex, edge used to enter, next incidence position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, via, ref mut pos)) = stack.last_mut() {
            if let Some(&e) = g.incident(v).get(*pos) {
                *pos += 1;
                if e == via {
                    continue;
                }
                let w = g.other(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.insert(via);
                    }
                }
            }
        }
    }
    out
}

pub fn is_bridgeless(g: &Graph) -> bool {
    bridges(g).is_empty()
}

/// Component counts of a spanning subgraph, restricted to vertices that
/// meet at least one edge of the subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCount {
    pub components: usize,
    pub odd: usize,
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// `|H|_c` and `|H|_odd` for the subgraph `H = (V, sub)` with isolated
/// vertices dropped.
pub fn odd_components(g: &Graph, sub: &EdgeSet) -> ComponentCount {
    let mut dsu = Dsu::new(g.n());
    let mut touched = vec![false; g.n()];
    for e in sub.iter() {
        let (a, b) = g.edge(e);
        touched[a] = true;
        touched[b] = true;
        dsu.union(a, b);
    }
    let mut count = ComponentCount { components: 0, odd: 0 };
    for v in 0..g.n() {
        if touched[v] && dsu.find(v) == v {
            count.components += 1;
            if dsu.size[v] % 2 == 1 {
                count.odd += 1;
            }
        }
    }
    count
}

/// Connected components of the whole graph as a vertex labelling.
pub fn component_labels(g: &Graph) -> (usize, Vec<usize>) {
    let mut label = vec![usize::MAX; g.n()];
    let mut count = 0;
    for s in 0..g.n() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

pub fn is_connected(g: &Graph) -> bool {
    component_labels(g).0 <= 1
}

/// Two-colouring of a bipartite graph, if one exists.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        stack.push(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Largest `c` accepted by [`cyclic_edge_connectivity_at_least`].
pub const MAX_CYCLIC_CUT_CHECK: usize = 6;

/// Whether no edge cut with fewer than `c` edges separates two parts that
/// both contain a circuit.
///
/// Exhaustive over edge subsets `F` with `|F| < c`: `F` witnesses a
/// cycle-separating cut iff at least two components of `G - F` contain a
/// circuit. Graphs without two vertex-disjoint circuits are never separable
/// and report `true` for every `c`.
pub fn cyclic_edge_connectivity_at_least(g: &Graph, c: usize) -> Result<bool> {
    if c > MAX_CYCLIC_CUT_CHECK {
        return Err(Error::Parameter(format!(
            "cyclic connectivity check supports c <= {MAX_CYCLIC_CUT_CHECK}, got {c}"
        )));
    }
    Ok(find_cyclic_cut(g, c.saturating_sub(1)).is_none())
}

/// A cycle-separating edge set of size at most `max_size`, if any.
pub fn find_cyclic_cut(g: &Graph, max_size: usize) -> Option<Vec<usize>> {
    let m = g.m();
    let mut chosen = Vec::with_capacity(max_size);
    for size in 0..=max_size.min(m) {
        if search_cuts(g, size, 0, &mut chosen) {
            return Some(chosen);
        }
    }
    None
}

fn search_cuts(g: &Graph, size: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == size {
        return separates_cycles(g, chosen);
    }
    let remaining = size - chosen.len();
    for e in from..=g.m() - remaining {
        chosen.push(e);
        if search_cuts(g, size, e + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn separates_cycles(g: &Graph, removed: &[usize]) -> bool {
    let mut dsu = Dsu::new(g.n());
    let mut edges_in = vec![0usize; g.n()];
    let kept: Vec<usize> = (0..g.m()).filter(|e| !removed.contains(e)).collect();
    for &e in &kept {
        let (a, b) = g.edge(e);
        dsu.union(a, b);
    }
    for &e in &kept {
        let r = dsu.find(g.edge(e).0);
        edges_in[r] += 1;
    }
    let mut cyclic = 0;
    for v in 0..g.n() {
        if dsu.find(v) == v && edges_in[v] >= dsu.size[v] {
            cyclic += 1;
            if cyclic >= 2 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::petersen;

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn girth_small() {
        assert_eq!(girth(&k4()), Some(3));
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()), None);
        assert_eq!(girth(&Graph::from_edges(2, [(0, 1), (0, 1)]).unwrap()), Some(2));
        assert_eq!(girth(&Graph::from_edges(1, [(0, 0)]).unwrap()), Some(1));
    }

    #[test]
    fn tree_edges_are_bridges() {
        let t = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(bridges(&t).to_vec(), vec![0, 1, 2]);
        assert!(is_bridgeless(&petersen()));
        // parallel edges are not bridges
        let d = Graph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(bridges(&d).to_vec(), vec![2]);
    }

    #[test]
    fn dumbbell_bridge() {
        // two K4-minus-an-edge blocks joined by edge 10
        let g = Graph::from_edges(
            8,
            [
                (0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
                (4, 5), (4, 6), (5, 6), (5, 7), (6, 7),
                (0, 4),
                (3, 7),
            ],
        )
        .unwrap();
        assert_eq!(bridges(&g).to_vec(), Vec::<usize>::new());
        let (h, _) = g.delete(&[], &[11]);
        assert_eq!(bridges(&h).to_vec(), vec![10]);
    }

    #[test]
    fn odd_component_counts() {
        let g = k4();
        assert_eq!(odd_components(&g, &g.empty_edge_set()), ComponentCount { components: 0, odd: 0 });
        // complement of the perfect matching {01, 23}
        let sub = EdgeSet::from_indices(6, [1, 2, 3, 4]);
        assert_eq!(odd_components(&g, &sub), ComponentCount { components: 1, odd: 0 });
    }

    #[test]
    fn cyclic_connectivity() {
        let p = petersen();
        assert!(cyclic_edge_connectivity_at_least(&p, 5).unwrap());
        assert!(!cyclic_edge_connectivity_at_least(&p, 6).unwrap());
        for c in 0..=6 {
            assert!(cyclic_edge_connectivity_at_least(&k4(), c).unwrap());
        }
        assert!(cyclic_edge_connectivity_at_least(&p, 7).is_err());
    }

    #[test]
    fn bipartite_check() {
        let k33 = Graph::from_edges(
            6,
            [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(is_bipartite(&k33));
        assert!(!is_bipartite(&k4()));
    }
}
