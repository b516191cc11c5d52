//! Cores of 1-factor triples: the subgraph on uncovered and multiply covered
//! edges, its classification, and the diagnostics used to check the odd
//! circuit bound against it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphcore::{EdgeSet, Graph};
use crate::invariants::perfect_matching_list;
use crate::matchings::{odd_circuits_of_complement, Matching};

/// Index pairs `(i, j)` of the triple, in the order used by `e_pair`.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Edge classes of a graph relative to three perfect matchings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreDecomposition {
    #[serde(skip)]
    pub host: Graph,
    pub triple: [EdgeSet; 3],
    pub e0: EdgeSet,
    pub e1: EdgeSet,
    pub e2: EdgeSet,
    pub e3: EdgeSet,
    /// `e_single[i] = E_1 & M_i`.
    pub e_single: [EdgeSet; 3],
    /// `e_pair[p] = E_2 \ M_l` where `PAIRS[p] = (i, j)` and `l` is the third index.
    pub e_pair: [EdgeSet; 3],
    pub core_edges: EdgeSet,
    pub k: usize,
}

impl CoreDecomposition {
    pub fn new(g: &Graph, triple: [EdgeSet; 3]) -> Result<Self> {
        for pm in &triple {
            Matching::perfect(g, pm.clone())?;
        }
        let m = g.m();
        let mut class = [EdgeSet::new(m), EdgeSet::new(m), EdgeSet::new(m), EdgeSet::new(m)];
        let mut e_single = [EdgeSet::new(m), EdgeSet::new(m), EdgeSet::new(m)];
        let mut e_pair = [EdgeSet::new(m), EdgeSet::new(m), EdgeSet::new(m)];
        for e in 0..m {
            let inside = [0, 1, 2].map(|i| triple[i].contains(e));
            let c = inside.iter().filter(|&&b| b).count();
            class[c].insert(e);
            match c {
                1 => e_single[inside.iter().position(|&b| b).expect("one")].insert(e),
                2 => {
                    let p = PAIRS
                        .iter()
                        .position(|&(i, j)| inside[i] && inside[j])
                        .expect("two");
                    e_pair[p].insert(e)
                }
                _ => true,
            };
        }
        let [e0, e1, e2, e3] = class;
        let core_edges = e0.union(&e2).union(&e3);
        let k = e0.len();
        assert_eq!(e0.len() + e1.len() + e2.len() + e3.len(), m, "edge classes must partition E");
        assert_eq!(e1.len() + 2 * e2.len() + 3 * e3.len(), m, "slot count must equal m");
        assert_eq!(k, e2.len() + 2 * e3.len(), "core identity |E0| = |E2| + 2|E3| violated");
        let d = Self {
            host: g.clone(),
            triple,
            e0,
            e1,
            e2,
            e3,
            e_single,
            e_pair,
            core_edges,
            k,
        };
        for v in 0..g.n() {
            let deg = d.core_degree(v);
            assert!(deg == 0 || deg == 2 || deg == 3, "core vertex {v} has degree {deg}");
        }
        Ok(d)
    }

    pub fn core_degree(&self, v: usize) -> usize {
        self.host
            .incident(v)
            .iter()
            .filter(|&&e| self.core_edges.contains(e))
            .count()
    }

    /// Vertices touched by the core, ascending.
    pub fn core_vertices(&self) -> Vec<usize> {
        (0..self.host.n()).filter(|&v| self.core_degree(v) > 0).collect()
    }

    /// `M_i & M_j` as an edge set.
    pub fn pair_intersection(&self, p: usize) -> EdgeSet {
        let (i, j) = PAIRS[p];
        self.triple[i].intersection(&self.triple[j])
    }
}

/// `core_decompose` under its conventional name.
pub fn core_decompose(g: &Graph, triple: [EdgeSet; 3]) -> Result<CoreDecomposition> {
    CoreDecomposition::new(g, triple)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoreClass {
    pub proper: bool,
    pub cyclic: bool,
}

/// Proper: the core is not the whole graph. Cyclic: every core vertex has
/// degree 2 in the core, equivalently `E_3` is empty. The empty core is both.
pub fn classify_core(d: &CoreDecomposition) -> CoreClass {
    CoreClass {
        proper: d.core_edges.len() < d.host.m(),
        cyclic: d.e3.is_empty(),
    }
}

/// Circuit lengths of a cyclic core, ascending; `None` when not cyclic.
pub fn core_circuits(d: &CoreDecomposition) -> Option<Vec<usize>> {
    if !d.e3.is_empty() {
        return None;
    }
    let mut lens = Vec::new();
    let mut seen = d.host.empty_edge_set();
    for start in d.core_edges.iter() {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start);
        let (v0, mut v) = d.host.edge(start);
        let (mut e, mut len) = (start, 1);
        while v != v0 {
            e = *d
                .host
                .incident(v)
                .iter()
                .find(|&&f| f != e && d.core_edges.contains(f))
                .expect("cyclic core is 2-regular");
            seen.insert(e);
            len += 1;
            v = d.host.other(e, v);
        }
        lens.push(len);
    }
    lens.sort_unstable();
    Some(lens)
}

/// Why a core fails to be a Petersen core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PetersenViolation {
    NotCyclic,
    /// A 5-edge simple path (vertices, then edges) with two edges in the same
    /// pairwise intersection `M_i & M_j`.
    Path {
        vertices: Vec<usize>,
        edges: Vec<usize>,
        pair: (usize, usize),
    },
}

/// A cyclic core in which no simple 5-edge path contains two edges of the
/// same pairwise intersection `M_i & M_j`.
pub fn is_petersen_core(d: &CoreDecomposition) -> std::result::Result<(), PetersenViolation> {
    if !d.e3.is_empty() {
        return Err(PetersenViolation::NotCyclic);
    }
    let inter: Vec<EdgeSet> = (0..3).map(|p| d.pair_intersection(p)).collect();
    let mut found = None;
    for_each_simple_path(&d.host, &d.core_edges, 5, |vs, es| {
        for (p, set) in inter.iter().enumerate() {
            if es.iter().filter(|&&e| set.contains(e)).count() >= 2 {
                found = Some(PetersenViolation::Path {
                    vertices: vs.to_vec(),
                    edges: es.to_vec(),
                    pair: PAIRS[p],
                });
                return false;
            }
        }
        true
    });
    match found {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// Calls `visit` on every simple path with exactly `len` edges inside `sub`,
/// each path once per direction. Stops early when `visit` returns false.
fn for_each_simple_path(
    g: &Graph,
    sub: &EdgeSet,
    len: usize,
    mut visit: impl FnMut(&[usize], &[usize]) -> bool,
) {
    fn rec(
        g: &Graph,
        sub: &EdgeSet,
        len: usize,
        vs: &mut Vec<usize>,
        es: &mut Vec<usize>,
        on: &mut [bool],
        visit: &mut dyn FnMut(&[usize], &[usize]) -> bool,
    ) -> bool {
        if es.len() == len {
            return visit(vs, es);
        }
        let v = *vs.last().expect("non-empty");
        for &e in g.incident(v) {
            if !sub.contains(e) {
                continue;
            }
            let w = g.other(e, v);
            if on[w] {
                continue;
            }
            on[w] = true;
            vs.push(w);
            es.push(e);
            let go = rec(g, sub, len, vs, es, on, visit);
            es.pop();
            vs.pop();
            on[w] = false;
            if !go {
                return false;
            }
        }
        true
    }
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        if !g.incident(s).iter().any(|&e| sub.contains(e)) {
            continue;
        }
        on[s] = true;
        let mut vs = vec![s];
        let mut es = Vec::with_capacity(len);
        let go = rec(g, sub, len, &mut vs, &mut es, &mut on, &mut visit);
        on[s] = false;
        if !go {
            return;
        }
    }
}

/// Odd circuits of each complementary 2-factor and their sum.
pub fn odd_complement_sum(d: &CoreDecomposition) -> ([usize; 3], usize) {
    let each = [0, 1, 2].map(|i| odd_circuits_of_complement(&d.host, &d.triple[i]));
    (each, each.iter().sum())
}

/// Vertices incident with two uncovered edges. There are exactly `2|E_3|`
/// of them: the ends of each `E_3` edge, whose other two edges are uncovered.
pub fn bad_vertices(d: &CoreDecomposition) -> Vec<usize> {
    let bad: Vec<usize> = (0..d.host.n())
        .filter(|&v| d.host.incident(v).iter().filter(|&&e| d.e0.contains(e)).count() >= 2)
        .collect();
    assert_eq!(bad.len(), 2 * d.e3.len(), "bad vertex count must be 2|E3|");
    bad
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    /// The matching `M_i` the path avoids.
    pub avoids: usize,
    /// The `j` with both ends incident to an `E_(i,j)` edge.
    pub with: usize,
}

/// Odd-length core paths avoiding some `M_i` whose end vertices both meet an
/// edge of `E_(i,j)` for one `j != i`. Each path is reported once, from its
/// lower-indexed end.
pub fn find_bad_paths(d: &CoreDecomposition) -> Vec<BadPath> {
    let g = &d.host;
    let mut out = Vec::new();
    for i in 0..3 {
        // core minus M_i has maximum degree 2, so paths here are few
        let sub = d.core_edges.difference(&d.triple[i]);
        let max_len = sub.len();
        for j in (0..3).filter(|&j| j != i) {
            let p = PAIRS
                .iter()
                .position(|&pr| pr == (i.min(j), i.max(j)))
                .expect("pair");
            let meets = |v: usize| g.incident(v).iter().any(|&e| d.e_pair[p].contains(e));
            for len in (1..=max_len).step_by(2) {
                for_each_simple_path(g, &sub, len, |vs, es| {
                    let (a, b) = (vs[0], *vs.last().expect("non-empty"));
                    if a < b && meets(a) && meets(b) {
                        out.push(BadPath {
                            vertices: vs.to_vec(),
                            edges: es.to_vec(),
                            avoids: i,
                            with: j,
                        });
                    }
                    true
                });
            }
        }
    }
    out
}

/// Outcome of the cyclic-core search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicCoreSearch {
    Found {
        indices: [usize; 3],
        decomposition: Box<CoreDecomposition>,
    },
    NoneExists,
    /// The budget ran out first; says nothing about existence.
    Unknown,
}

/// First triple (non-decreasing indices in enumeration order) with
/// `M_1 & M_2 & M_3` empty, which is exactly a cyclic core. `budget` counts
/// examined triples.
pub fn find_cyclic_core(g: &Graph, budget: u64) -> Result<CyclicCoreSearch> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let list = perfect_matching_list(g, usize::MAX).expect("uncapped");
    if list.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let mut spent = 0u64;
    for i in 0..list.len() {
        for j in i..list.len() {
            let ij = list[i].intersection(&list[j]);
            for l in j..list.len() {
                spent += 1;
                if spent > budget {
                    return Ok(CyclicCoreSearch::Unknown);
                }
                if ij.is_disjoint(&list[l]) {
                    let triple = [list[i].clone(), list[j].clone(), list[l].clone()];
                    return Ok(CyclicCoreSearch::Found {
                        indices: [i, j, l],
                        decomposition: Box::new(CoreDecomposition::new(g, triple)?),
                    });
                }
            }
        }
    }
    Ok(CyclicCoreSearch::NoneExists)
}

/// Every non-decreasing index triple whose uncovered set has exactly
/// `target` edges, up to `limit` results. Pairwise intersections bound
/// `|E_0|` from below, so pairs meeting in more than `target` edges are
/// skipped.
pub fn triples_with_value(list: &[EdgeSet], target: usize, limit: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    let m = list.first().map_or(0, |s| s.capacity());
    for i in 0..list.len() {
        let near: Vec<usize> = (i..list.len())
            .filter(|&l| list[i].intersection_len(&list[l]) <= target)
            .collect();
        for (a, &j) in near.iter().enumerate() {
            for &l in &near[a..] {
                if list[j].intersection_len(&list[l]) > target {
                    continue;
                }
                let covered = list[i].union(&list[j]).union(&list[l]).len();
                if m - covered == target {
                    out.push([i, j, l]);
                    if out.len() == limit {
                        return out;
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{flower_snark, k4, petersen};
    use crate::invariants::{mu, SearchOptions};
    use crate::matchings::enumerate_perfect_matchings;

    fn petersen_optimal() -> CoreDecomposition {
        let p = petersen();
        let w = mu(&p, 3, SearchOptions::default()).unwrap().witness;
        CoreDecomposition::new(&p, [w[0].clone(), w[1].clone(), w[2].clone()]).unwrap()
    }

    #[test]
    fn identical_triple_core_is_everything() {
        let p = petersen();
        let m = enumerate_perfect_matchings(&p).next().unwrap();
        let d = CoreDecomposition::new(&p, [m.clone(), m.clone(), m]).unwrap();
        assert_eq!(d.core_edges.len(), p.m());
        assert_eq!((d.e3.len(), d.k), (5, 10));
        assert_eq!(classify_core(&d), CoreClass { proper: false, cyclic: false });
        assert_eq!(odd_complement_sum(&d).1, 6);
        assert_eq!(bad_vertices(&d).len(), 10);
    }

    #[test]
    fn k4_partition_core_is_empty() {
        let g = k4();
        let pms: Vec<EdgeSet> = enumerate_perfect_matchings(&g).collect();
        let d = CoreDecomposition::new(&g, [pms[0].clone(), pms[1].clone(), pms[2].clone()]).unwrap();
        assert_eq!(d.e1.len(), 6);
        assert_eq!(d.k, 0);
        assert_eq!(classify_core(&d), CoreClass { proper: true, cyclic: true });
        assert_eq!(is_petersen_core(&d), Ok(()));
        assert!(find_bad_paths(&d).is_empty());
        assert_eq!(odd_complement_sum(&d).1, 0);
    }

    #[test]
    fn k4_identical_triple_has_four_bad_vertices() {
        let g = k4();
        let m = enumerate_perfect_matchings(&g).next().unwrap();
        let d = CoreDecomposition::new(&g, [m.clone(), m.clone(), m]).unwrap();
        assert_eq!(bad_vertices(&d), vec![0, 1, 2, 3]);
    }

    #[test]
    fn petersen_optimal_core() {
        let d = petersen_optimal();
        assert_eq!((d.e0.len(), d.e2.len(), d.e3.len(), d.k), (3, 3, 0, 3));
        assert_eq!(classify_core(&d), CoreClass { proper: true, cyclic: true });
        assert_eq!(core_circuits(&d), Some(vec![6]));
        assert_eq!(is_petersen_core(&d), Ok(()));
        assert_eq!(odd_complement_sum(&d), ([2, 2, 2], 6));
        assert!(bad_vertices(&d).is_empty());
        for bp in find_bad_paths(&d) {
            assert!(bp.edges.iter().any(|&e| d.e0.contains(e)));
        }
    }

    /// K_{3,3} as the 6-circuit `0..6` (edges 0..6) plus chords `0-3, 1-4,
    /// 2-5` (edges 6..9). The triple `(A, A, B)` with `A = {0, 2, 4}` and
    /// `B` the chords leaves `1, 3, 5` uncovered: a 6-circuit core whose `E_2`
    /// edges all lie in `M1 & M2`, consecutive ones one uncovered edge apart.
    fn synthetic() -> CoreDecomposition {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 3), (1, 4), (2, 5)]);
        let g = Graph::from_edges(6, edges).unwrap();
        let a = EdgeSet::from_indices(9, [0, 2, 4]);
        let b = EdgeSet::from_indices(9, [6, 7, 8]);
        CoreDecomposition::new(&g, [a.clone(), a, b]).unwrap()
    }

    #[test]
    fn synthetic_violation_is_reported() {
        let d = synthetic();
        assert_eq!(core_circuits(&d), Some(vec![6]));
        match is_petersen_core(&d) {
            Err(PetersenViolation::Path { edges, pair, .. }) => {
                assert_eq!(edges.len(), 5);
                assert_eq!(pair, (0, 1));
            }
            other => panic!("expected a path violation, got {other:?}"),
        }
        let bad = find_bad_paths(&d);
        assert!(bad.iter().any(|b| b.edges == vec![1] && b.avoids == 0 && b.with == 1));
    }

    #[test]
    fn cyclic_core_search() {
        match find_cyclic_core(&petersen(), u64::MAX).unwrap() {
            CyclicCoreSearch::Found { decomposition, .. } => {
                assert!(classify_core(&decomposition).cyclic)
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            find_cyclic_core(&k4(), u64::MAX).unwrap(),
            CyclicCoreSearch::Found { .. }
        ));
        assert!(matches!(
            find_cyclic_core(&flower_snark(5).unwrap(), u64::MAX).unwrap(),
            CyclicCoreSearch::Found { .. }
        ));
        assert_eq!(find_cyclic_core(&petersen(), 0).unwrap(), CyclicCoreSearch::Unknown);
    }

    #[test]
    fn petersen_optimal_triples_are_all_petersen_cores() {
        let p = petersen();
        let list = perfect_matching_list(&p, 100).unwrap();
        let all = triples_with_value(&list, 3, usize::MAX);
        assert!(!all.is_empty());
        for [i, j, l] in all {
            let d = CoreDecomposition::new(&p, [list[i].clone(), list[j].clone(), list[l].clone()]).unwrap();
            assert_eq!(is_petersen_core(&d), Ok(()));
        }
    }

    #[test]
    fn rejects_non_perfect() {
        let g = k4();
        let half = EdgeSet::from_indices(6, [0]);
        assert_eq!(
            CoreDecomposition::new(&g, [half.clone(), half.clone(), half]),
            Err(Error::NotPerfect)
        );
    }
}
