//! Shared corpus and brute-force oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's search code: they scan
//! plain subsets and count by hand.

#![allow(dead_code)]

use cubecore::families::{
    bipartite_inflate, double_flower_j7, flower_snark, goldberg_snark, heawood, k33, k4,
    petersen, random_bridgeless_cubic, theta,
};
use cubecore::graphcore::{junction_2, EdgeSet, Graph, Pairing};
use cubecore::invariants::{mu, SearchOptions};

/// Named graphs, each with an id. Includes every generator family.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let p = petersen();
    let j5 = flower_snark(5).unwrap();
    vec![
        ("petersen".into(), p.clone()),
        ("k4".into(), k4()),
        ("k33".into(), k33()),
        ("heawood".into(), heawood()),
        ("theta".into(), theta()),
        ("J5".into(), j5.clone()),
        ("J7".into(), flower_snark(7).unwrap()),
        ("J9".into(), flower_snark(9).unwrap()),
        ("G5".into(), goldberg_snark(5).unwrap()),
        ("G7".into(), goldberg_snark(7).unwrap()),
        ("P+P".into(), core_junction(&p, &p)),
        ("P+J5".into(), core_junction(&p, &j5)),
        ("P@K33".into(), bipartite_inflate(&p, &k33(), &[0]).unwrap()),
        ("double-J7".into(), double_flower_j7().unwrap().graph),
    ]
}

/// 200 random bridgeless cubic graphs with n in {10, 12, ..., 20}.
pub fn random_graphs() -> Vec<(String, Graph)> {
    (0..200u64)
        .map(|s| {
            let n = 10 + 2 * (s as usize % 6);
            (format!("random-n{n}-s{s}"), random_bridgeless_cubic(n, s).unwrap())
        })
        .collect()
}

/// First uncovered edge of the optimal triple.
pub fn uncovered_edge(g: &Graph) -> usize {
    let w = mu(g, 3, SearchOptions::default()).unwrap().witness;
    (0..g.m())
        .find(|&e| w.iter().all(|pm| !pm.contains(e)))
        .expect("snarks have uncovered edges")
}

/// 2-junction at uncovered edges of optimal cores.
pub fn core_junction(a: &Graph, b: &Graph) -> Graph {
    junction_2(a, uncovered_edge(a), b, uncovered_edge(b), Pairing::Straight)
        .unwrap()
        .graph
}

/// Every perfect matching, by scanning all `n/2`-subsets of edges.
pub fn brute_perfect_matchings(g: &Graph) -> Vec<EdgeSet> {
    let (n, m) = (g.n(), g.m());
    let half = n / 2;
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }
    let mut idx: Vec<usize> = (0..half).collect();
    loop {
        let mut seen = vec![false; n];
        let ok = idx.iter().all(|&e| {
            let (u, v) = g.edge(e);
            u != v && !std::mem::replace(&mut seen[u], true) && !std::mem::replace(&mut seen[v], true)
        });
        if ok {
            out.push(EdgeSet::from_indices(m, idx.iter().copied()));
        }
        // next combination
        let mut i = half;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + m - half {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..half {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Uncovered count of a list of matchings, edge by edge.
pub fn uncovered(m: usize, list: &[&EdgeSet]) -> usize {
    (0..m).filter(|&e| list.iter().all(|s| !s.contains(e))).count()
}

/// Pruning-free scan over all non-decreasing triples: the minimum and the
/// first triple attaining it.
pub fn triple_scan(m: usize, pms: &[EdgeSet]) -> (usize, [usize; 3]) {
    let mut best = (usize::MAX, [0; 3]);
    for i in 0..pms.len() {
        for j in i..pms.len() {
            for l in j..pms.len() {
                let v = uncovered(m, &[&pms[i], &pms[j], &pms[l]]);
                if v < best.0 {
                    best = (v, [i, j, l]);
                }
            }
        }
    }
    best
}

/// Same for pairs and quadruples.
pub fn pair_scan(m: usize, pms: &[EdgeSet]) -> usize {
    let mut best = usize::MAX;
    for i in 0..pms.len() {
        for j in i..pms.len() {
            best = best.min(uncovered(m, &[&pms[i], &pms[j]]));
        }
    }
    best
}

pub fn quad_scan(m: usize, pms: &[EdgeSet]) -> usize {
    let mut best = usize::MAX;
    for i in 0..pms.len() {
        for j in i..pms.len() {
            for l in j..pms.len() {
                for t in l..pms.len() {
                    best = best.min(uncovered(m, &[&pms[i], &pms[j], &pms[l], &pms[t]]));
                }
            }
        }
    }
    best
}

/// Odd circuits of `E \ pm`, walking each circuit by hand.
pub fn odd_circuits(g: &Graph, pm: &EdgeSet) -> usize {
    let mut used = vec![false; g.m()];
    let mut odd = 0;
    for start in 0..g.m() {
        if pm.contains(start) || used[start] {
            continue;
        }
        used[start] = true;
        let (a, mut v) = g.edge(start);
        let mut len = 1;
        let mut e = start;
        while v != a {
            e = *g
                .incident(v)
                .iter()
                .find(|&&f| f != e && !pm.contains(f) && !used[f])
                .unwrap();
            used[e] = true;
            len += 1;
            v = g.other(e, v);
        }
        odd += len % 2;
    }
    odd
}

pub fn brute_oddness(g: &Graph) -> usize {
    brute_perfect_matchings(g).iter().map(|pm| odd_circuits(g, pm)).min().unwrap()
}

/// Minimum `|M1 & M2|` over distinct pairs by plain scan.
pub fn brute_gamma2(pms: &[EdgeSet]) -> usize {
    let mut best = pms[0].len();
    for i in 0..pms.len() {
        for j in i + 1..pms.len() {
            best = best.min(pms[i].iter().filter(|&e| pms[j].contains(e)).count());
        }
    }
    best
}

/// 3-edge-colourable iff three pairwise disjoint perfect matchings exist.
pub fn brute_colorable(g: &Graph) -> bool {
    let pms = brute_perfect_matchings(g);
    (0..pms.len()).any(|i| {
        (i + 1..pms.len()).any(|j| {
            pms[i].is_disjoint(&pms[j])
                && (j + 1..pms.len()).any(|l| pms[l].is_disjoint(&pms[i]) && pms[l].is_disjoint(&pms[j]))
        })
    })
}

/// Smallest colour class over all proper 4-edge-colourings, by exhaustive
/// assignment. Only for tiny graphs.
pub fn brute_resistance(g: &Graph) -> usize {
    let m = g.m();
    assert!(m <= 10, "4^m assignments");
    let mut best = usize::MAX;
    let mut col = vec![0u8; m];
    loop {
        let proper = (0..g.n()).all(|v| {
            let inc = g.incident(v);
            (0..inc.len()).all(|a| (a + 1..inc.len()).all(|b| inc[a] == inc[b] || col[inc[a]] != col[inc[b]]))
        }) && (0..m).all(|e| !g.is_loop(e));
        if proper {
            let smallest = (0..4u8).map(|c| col.iter().filter(|&&x| x == c).count()).min().unwrap();
            best = best.min(smallest);
        }
        let mut i = 0;
        while i < m && col[i] == 3 {
            col[i] = 0;
            i += 1;
        }
        if i == m {
            return best;
        }
        col[i] += 1;
    }
}
