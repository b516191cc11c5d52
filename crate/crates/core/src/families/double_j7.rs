use std::collections::BTreeMap;

use serde::Serialize;

use crate::cores::{core_circuits, triples_with_value, CoreDecomposition};
use crate::error::{Error, Result};
use crate::graphcore::{junction_3, EdgeSet, Graph};
use crate::invariants::{mu, perfect_matching_list, Bounded, SearchOptions};

use super::flower_snark;

/// Shapes of all optimal cores of a graph, keyed by sorted circuit lengths
/// (`"non-cyclic"` for cores with an `E_3` edge).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreCensus {
    pub value: usize,
    pub optimal_triples: usize,
    pub shapes: BTreeMap<String, usize>,
}

pub fn core_census(g: &Graph, value: usize, list: &[EdgeSet]) -> Result<CoreCensus> {
    let triples = triples_with_value(list, value, usize::MAX);
    let mut shapes = BTreeMap::new();
    for [i, j, l] in &triples {
        let d = CoreDecomposition::new(g, [list[*i].clone(), list[*j].clone(), list[*l].clone()])?;
        let key = match core_circuits(&d) {
            Some(c) => format!("{c:?}"),
            None => "non-cyclic".to_string(),
        };
        *shapes.entry(key).or_insert(0) += 1;
    }
    Ok(CoreCensus {
        value,
        optimal_triples: triples.len(),
        shapes,
    })
}

/// Two copies of `J_7` glued by a 3-junction at a vertex of a 6-circuit
/// `mu_3`-core, with the triple that certifies `mu_3 <= 5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleJ7 {
    #[serde(skip)]
    pub graph: Graph,
    /// The junction vertex in each copy of `J_7`.
    pub u: usize,
    /// Three perfect matchings of `graph` leaving exactly five edges
    /// uncovered; their core is a single 10-circuit.
    pub witness: [EdgeSet; 3],
    /// The `J_7` triple the witness is copied from.
    pub j7_witness: [EdgeSet; 3],
    pub j7_census: CoreCensus,
}

/// Builds the double-`J_7` graph on 54 vertices.
///
/// The lexicographically least optimal triple of `J_7` is used; its core must
/// be a 6-circuit. The junction vertex is the lowest vertex on that core, and
/// its neighbours are paired in index order. Each matching of the triple is
/// copied into both halves; a cross edge inherits the label of the edge it
/// replaces, which is the same in both copies.
pub fn double_flower_j7() -> Result<DoubleJ7> {
    let j7 = flower_snark(7)?;
    let r = mu(&j7, 3, SearchOptions::default())?;
    if r.value != Bounded::Exact(3) {
        return Err(Error::Gate(format!("mu_3(J_7) computed as {:?}, expected 3", r.value)));
    }
    let t: [EdgeSet; 3] = [r.witness[0].clone(), r.witness[1].clone(), r.witness[2].clone()];
    let d = CoreDecomposition::new(&j7, t.clone())?;
    if core_circuits(&d) != Some(vec![6]) {
        return Err(Error::Gate(format!(
            "the chosen mu_3-core of J_7 is not a 6-circuit: {:?}",
            core_circuits(&d)
        )));
    }
    let list = perfect_matching_list(&j7, usize::MAX).expect("uncapped");
    let census = core_census(&j7, 3, &list)?;

    let u = d.core_vertices()[0];
    let j = junction_3(&j7, u, None, &j7, u, None)?;
    let g = j.graph;
    let mut nb: Vec<usize> = j7.neighbors(u).collect();
    nb.sort_unstable();
    let mut witness = [g.empty_edge_set(), g.empty_edge_set(), g.empty_edge_set()];
    for (i, pm) in t.iter().enumerate() {
        for e in pm.iter() {
            for map in [&j.left, &j.right] {
                if let Some(f) = map.edges[e] {
                    witness[i].insert(f);
                }
            }
        }
        for (c, &x) in nb.iter().enumerate() {
            let old = j7.edges_between(u, x)[0];
            if pm.contains(old) {
                witness[i].insert(j.cut[c]);
            }
        }
    }
    let wd = CoreDecomposition::new(&g, witness.clone())?;
    if wd.k != 5 || core_circuits(&wd) != Some(vec![10]) {
        return Err(Error::Gate(format!(
            "double-J_7 witness leaves {} edges with core {:?}",
            wd.k,
            core_circuits(&wd)
        )));
    }
    Ok(DoubleJ7 {
        graph: g,
        u,
        witness,
        j7_witness: t,
        j7_census: census,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{girth, is_bridgeless};

    #[test]
    fn shape_and_witness() {
        let dj = double_flower_j7().unwrap();
        assert_eq!((dj.graph.n(), dj.graph.m()), (54, 81));
        assert!(dj.graph.is_cubic() && is_bridgeless(&dj.graph));
        assert_eq!(girth(&dj.graph), Some(6));
        assert_eq!(dj.u, 0);
        assert_eq!(dj.j7_census.shapes.keys().collect::<Vec<_>>(), vec!["[6]"]);
    }
}
