use super::{Graph, IndexMap};
use crate::error::{Error, Result};

/// Result of a graph-level junction: the new graph, the junction-cut edges and
/// the old-to-new index maps of both inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Junction<const K: usize> {
    pub graph: Graph,
    pub cut: [usize; K],
    pub left: IndexMap,
    pub right: IndexMap,
}

fn split_map(map: IndexMap, n1: usize, m1: usize) -> (IndexMap, IndexMap) {
    let (lv, rv) = map.vertices.split_at(n1);
    let (le, re) = map.edges.split_at(m1);
    (
        IndexMap {
            vertices: lv.to_vec(),
            edges: le.to_vec(),
        },
        IndexMap {
            vertices: rv.to_vec(),
            edges: re.to_vec(),
        },
    )
}

/// The three distinct neighbours of `u`, ascending.
fn simple_neighbours(g: &Graph, u: usize) -> Result<[usize; 3]> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange(u));
    }
    let mut nb: Vec<usize> = g.neighbors(u).collect();
    if nb.len() != 3 {
        return Err(Error::NotCubic);
    }
    nb.sort_unstable();
    nb.dedup();
    if nb.len() != 3 || nb.contains(&u) {
        return Err(Error::MultiEdgeAt(u));
    }
    Ok([nb[0], nb[1], nb[2]])
}

fn check_order(g: &Graph, u: usize, order: Option<[usize; 3]>) -> Result<[usize; 3]> {
    let nb = simple_neighbours(g, u)?;
    match order {
        None => Ok(nb),
        Some(o) => {
            let mut sorted = o;
            sorted.sort_unstable();
            if sorted != nb {
                return Err(Error::Parameter(format!(
                    "neighbour order {o:?} is not a permutation of the neighbours {nb:?} of {u}"
                )));
            }
            Ok(o)
        }
    }
}

/// 3-junction of `h1` and `h2` on `(u1, u2)`: both vertices are deleted and
/// their neighbours are joined pairwise, `order1[i]` to `order2[i]`. Orders
/// default to ascending vertex index.
pub fn junction_3(
    h1: &Graph,
    u1: usize,
    order1: Option<[usize; 3]>,
    h2: &Graph,
    u2: usize,
    order2: Option<[usize; 3]>,
) -> Result<Junction<3>> {
    if !h1.is_cubic() || !h2.is_cubic() {
        return Err(Error::NotCubic);
    }
    let a = check_order(h1, u1, order1)?;
    let b = check_order(h2, u2, order2)?;
    let shift = h1.n();
    let union = h1.disjoint_union(h2);
    let (mut graph, map) = union.delete(&[u1, u2 + shift], &[]);
    let mut cut = [0; 3];
    for i in 0..3 {
        let x = map.vertices[a[i]].expect("neighbour survives");
        let y = map.vertices[b[i] + shift].expect("neighbour survives");
        cut[i] = graph.add_edge(x, y)?;
    }
    let (left, right) = split_map(map, h1.n(), h1.m());
    Ok(Junction { graph, cut, left, right })
}

/// Which endpoint of the second edge joins which endpoint of the first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pairing {
    /// With `e1 = xy` and `e2 = uv` (endpoints as stored), add `ux` and `vy`.
    #[default]
    Straight,
    /// Add `uy` and `vx`.
    Crossed,
}

/// 2-junction: removes `e1 = xy` from `g1` and `e2 = uv` from `g2` and adds
/// the two cross edges chosen by `pairing`.
pub fn junction_2(
    g1: &Graph,
    e1: usize,
    g2: &Graph,
    e2: usize,
    pairing: Pairing,
) -> Result<Junction<2>> {
    if e1 >= g1.m() {
        return Err(Error::EdgeOutOfRange(e1));
    }
    if e2 >= g2.m() {
        return Err(Error::EdgeOutOfRange(e2));
    }
    if g1.is_loop(e1) {
        return Err(Error::LoopEdge(e1));
    }
    if g2.is_loop(e2) {
        return Err(Error::LoopEdge(e2));
    }
    let (x, y) = g1.edge(e1);
    let (u, v) = g2.edge(e2);
    let shift = g1.n();
    let union = g1.disjoint_union(g2);
    let (mut graph, map) = union.delete(&[], &[e1, e2 + g1.m()]);
    let (p, q) = match pairing {
        Pairing::Straight => ((u, x), (v, y)),
        Pairing::Crossed => ((u, y), (v, x)),
    };
    let c0 = graph.add_edge(p.0 + shift, p.1)?;
    let c1 = graph.add_edge(q.0 + shift, q.1)?;
    let (left, right) = split_map(map, g1.n(), g1.m());
    Ok(Junction {
        graph,
        cut: [c0, c1],
        left,
        right,
    })
}
