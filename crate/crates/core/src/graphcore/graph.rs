use serde::Serialize;

use super::EdgeSet;
use crate::error::{Error, Result};

/// Undirected multigraph with stable vertex and edge indices.
///
/// Edges are stored as `(u, v)` with `u <= v`; loops (`u == v`) and parallel
/// edges are allowed. A loop contributes 2 to the degree of its vertex and
/// appears twice in that vertex's incidence list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange(x));
            }
        }
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        let e = self.edges.len();
        self.edges.push((a, b));
        self.incidence[a].push(e);
        self.incidence[b].push(e);
        Ok(e)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Incident edge indices of `v` in index order (a loop is listed twice).
    #[inline]
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// The endpoint of `e` opposite to `v`.
    #[inline]
    pub fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    #[inline]
    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.edges[e];
        a == b
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| self.other(e, v))
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    /// True when there are no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&(a, b)| a != b && seen.insert((a, b)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::new(self.m())
    }

    /// Edge indices joining `u` and `v`, in index order.
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incidence[u]
            .iter()
            .copied()
            .filter(|&e| self.other(e, u) == v)
            .collect();
        out.dedup();
        out
    }

    /// Adjacency test ignoring multiplicity.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.incidence[u].iter().any(|&e| self.other(e, u) == v)
    }

    /// Graph after deleting `vertices` and `edges`; survivors keep their
    /// relative order. Returns the graph and the old-to-new vertex and edge maps.
    pub fn delete(&self, vertices: &[usize], edges: &[usize]) -> (Graph, IndexMap) {
        let mut vmap = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in vmap.iter_mut().enumerate() {
            if !vertices.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        let mut emap = vec![None; self.m()];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if edges.contains(&e) {
                continue;
            }
            if let (Some(x), Some(y)) = (vmap[a], vmap[b]) {
                emap[e] = Some(g.add_edge(x, y).expect("mapped vertices are in range"));
            }
        }
        (g, IndexMap { vertices: vmap, edges: emap })
    }

    /// Vertex-disjoint union; the second graph's indices are shifted by
    /// `self.n()` (vertices) and `self.m()` (edges).
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.incidence.extend(std::iter::repeat_with(Vec::new).take(other.n));
        g.n += other.n;
        for &(a, b) in &other.edges {
            g.add_edge(a + self.n, b + self.n).expect("in range");
        }
        g
    }

    /// Same vertex set with only the edges of `keep`, in index order.
    pub fn spanning_subgraph(&self, keep: &EdgeSet) -> Graph {
        Graph::from_edges(self.n, keep.iter().map(|e| self.edges[e])).expect("in range")
    }
}

/// Old-to-new index maps returned by operations that delete vertices or edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap {
    pub vertices: Vec<Option<usize>>,
    pub edges: Vec<Option<usize>>,
}
