//! Perfect-matching enumeration, 3-edge-colourability and complementary
//! 2-factors.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphcore::{EdgeSet, Graph};

/// A matching of a host graph, stored as an edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    edges: EdgeSet,
    perfect: bool,
}

impl Matching {
    /// Validates that `edges` is a matching of `g` (no loops, no shared ends).
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self> {
        if edges.capacity() != g.m() {
            return Err(Error::Parameter("edge set belongs to another graph".into()));
        }
        let mut covered = vec![false; g.n()];
        for e in edges.iter() {
            let (a, b) = g.edge(e);
            if a == b {
                return Err(Error::LoopEdge(e));
            }
            for v in [a, b] {
                if std::mem::replace(&mut covered[v], true) {
                    return Err(Error::Parameter(format!("vertex {v} covered twice")));
                }
            }
        }
        let perfect = covered.iter().all(|&c| c);
        Ok(Self { edges, perfect })
    }

    pub fn perfect(g: &Graph, edges: EdgeSet) -> Result<Self> {
        let m = Self::new(g, edges)?;
        if !m.perfect {
            return Err(Error::NotPerfect);
        }
        Ok(m)
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn is_perfect(&self) -> bool {
        self.perfect
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }
}

struct Frame {
    vertex: usize,
    next: usize,
    chosen: Option<usize>,
}

/// Iterator over all perfect matchings of a graph.
///
/// Branching rule: take the lowest-index uncovered vertex and try its incident
/// edges in index order. The output order is therefore fixed by the graph's
/// indexing alone.
pub struct PerfectMatchings<'g> {
    g: &'g Graph,
    covered: Vec<bool>,
    stack: Vec<Frame>,
    descend: bool,
    done: bool,
}

impl<'g> PerfectMatchings<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self {
            g,
            covered: vec![false; g.n()],
            stack: Vec::with_capacity(g.n() / 2 + 1),
            descend: true,
            done: g.n() % 2 == 1,
        }
    }

    fn current(&self) -> EdgeSet {
        EdgeSet::from_indices(self.g.m(), self.stack.iter().filter_map(|f| f.chosen))
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        if self.done {
            return None;
        }
        loop {
            if self.descend {
                let start = self.stack.last().map_or(0, |f| f.vertex + 1);
                match (start..self.g.n()).find(|&v| !self.covered[v]) {
                    None => {
                        self.descend = false;
                        return Some(self.current());
                    }
                    Some(v) => {
                        self.stack.push(Frame {
                            vertex: v,
                            next: 0,
                            chosen: None,
                        });
                        self.descend = false;
                    }
                }
            }
            let g = self.g;
            let Some(top) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            let v = top.vertex;
            if let Some(e) = top.chosen.take() {
                self.covered[v] = false;
                self.covered[g.other(e, v)] = false;
            }
            let inc = g.incident(v);
            let found = (top.next..inc.len()).find(|&i| {
                let w = g.other(inc[i], v);
                w != v && !self.covered[w]
            });
            match found {
                Some(i) => {
                    let e = inc[i];
                    top.next = i + 1;
                    top.chosen = Some(e);
                    self.covered[v] = true;
                    self.covered[g.other(e, v)] = true;
                    self.descend = true;
                }
                None => {
                    self.stack.pop();
                    if self.stack.is_empty() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

pub fn enumerate_perfect_matchings(g: &Graph) -> PerfectMatchings<'_> {
    PerfectMatchings::new(g)
}

pub fn count_perfect_matchings(g: &Graph) -> usize {
    PerfectMatchings::new(g).count()
}

/// `E(g) \ m` for a perfect matching `m`; on a cubic graph every vertex has
/// degree 2 in the result.
pub fn complement_2_factor(g: &Graph, m: &EdgeSet) -> Result<EdgeSet> {
    Matching::perfect(g, m.clone())?;
    Ok(m.complement())
}

/// Number of odd circuits of the 2-factor complementary to perfect matching `m`.
pub fn odd_circuits_of_complement(g: &Graph, m: &EdgeSet) -> usize {
    crate::graphcore::odd_components(g, &m.complement()).odd
}

/// A proper 3-edge-colouring of the edges in `active` (all edges when
/// `None`), or `None` if none exists. Colours are `0..3`; inactive edges map
/// to `None`.
///
/// Backtracking that always branches on the most constrained uncoloured edge,
/// so forced colours propagate before any real choice is made. An edge with
/// no coloured neighbour starts a fresh component and only tries colour 0.
pub fn three_edge_coloring(g: &Graph, active: Option<&EdgeSet>) -> Option<Vec<Option<u8>>> {
    let edges: Vec<usize> = match active {
        Some(a) => a.iter().collect(),
        None => (0..g.m()).collect(),
    };
    if edges.iter().any(|&e| g.is_loop(e)) {
        return None;
    }
    let mut solver = ColorSolver {
        g,
        edges,
        color: vec![None; g.m()],
        mask: vec![0u8; g.n()],
    };
    for v in 0..g.n() {
        let deg = solver
            .edges
            .iter()
            .filter(|&&e| {
                let (a, b) = g.edge(e);
                a == v || b == v
            })
            .count();
        if deg > 3 {
            return None;
        }
    }
    solver.solve(solver.edges.len()).then_some(solver.color)
}

pub fn is_3_edge_colorable(g: &Graph) -> bool {
    three_edge_coloring(g, None).is_some()
}

struct ColorSolver<'g> {
    g: &'g Graph,
    edges: Vec<usize>,
    color: Vec<Option<u8>>,
    mask: Vec<u8>,
}

impl ColorSolver<'_> {
    fn solve(&mut self, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut pick = None;
        let mut pick_free = 0u8;
        let mut pick_count = u32::MAX;
        for &e in &self.edges {
            if self.color[e].is_some() {
                continue;
            }
            let (a, b) = self.g.edge(e);
            let free = !(self.mask[a] | self.mask[b]) & 0b111;
            let c = free.count_ones();
            if c < pick_count {
                pick = Some(e);
                pick_free = free;
                pick_count = c;
                if c <= 1 {
                    break;
                }
            }
        }
        let e = pick.expect("remaining > 0");
        if pick_count == 0 {
            return false;
        }
        let free = if pick_count == 3 { 0b001 } else { pick_free };
        let (a, b) = self.g.edge(e);
        for c in 0..3u8 {
            if free >> c & 1 == 0 {
                continue;
            }
            self.color[e] = Some(c);
            self.mask[a] |= 1 << c;
            self.mask[b] |= 1 << c;
            if self.solve(remaining - 1) {
                return true;
            }
            self.mask[a] &= !(1 << c);
            self.mask[b] &= !(1 << c);
            self.color[e] = None;
        }
        false
    }
}

/// Colour classes of a 3-edge-colouring of a cubic graph, as perfect matchings.
pub fn color_classes(g: &Graph, coloring: &[Option<u8>]) -> [EdgeSet; 3] {
    let mut classes = [g.empty_edge_set(), g.empty_edge_set(), g.empty_edge_set()];
    for (e, c) in coloring.iter().enumerate() {
        if let Some(c) = c {
            classes[*c as usize].insert(e);
        }
    }
    classes
}
