use crate::error::{Error, Result};
use crate::graphcore::{is_bridgeless, Graph};
use crate::matchings::is_3_edge_colorable;

/// The Petersen graph: outer 5-circuit `0..5`, spokes `i -- i+5`, inner
/// pentagram `i+5 -- (i+2)%5 + 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, edges).expect("static edge list")
}

pub fn k4() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).expect("static edge list")
}

pub fn k33() -> Graph {
    let mut edges = Vec::with_capacity(9);
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    Graph::from_edges(6, edges).expect("static edge list")
}

/// The Heawood graph (bipartite, cubic, girth 6) on 14 vertices.
pub fn heawood() -> Graph {
    let mut edges = Vec::with_capacity(21);
    for i in 0..14 {
        edges.push((i, (i + 1) % 14));
    }
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    Graph::from_edges(14, edges).expect("static edge list")
}

/// Three parallel edges between two vertices.
pub fn theta() -> Graph {
    Graph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).expect("static edge list")
}

fn check_odd_param(family: &str, n: usize) -> Result<()> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::Parameter(format!("{family} needs an odd size >= 5, got {n}")));
    }
    Ok(())
}

/// Flower snark `J_n` on `4n` vertices, laid out as `h_i = 4i`,
/// `u_i = 4i+1`, `v_i = 4i+2`, `w_i = 4i+3`.
///
/// Edges: the claws `h_i u_i`, `h_i v_i`, `h_i w_i`; the `n`-circuit on the
/// `u_i`; the `2n`-circuit `v_0 .. v_{n-1} w_0 .. w_{n-1} v_0`.
pub fn flower_snark(n: usize) -> Result<Graph> {
    check_odd_param("flower snark", n)?;
    let (h, u, v, w) = (|i| 4 * i, |i| 4 * i + 1, |i| 4 * i + 2, |i| 4 * i + 3);
    let mut edges = Vec::with_capacity(6 * n);
    for i in 0..n {
        edges.push((h(i), u(i)));
        edges.push((h(i), v(i)));
        edges.push((h(i), w(i)));
    }
    for i in 0..n {
        edges.push((u(i), u((i + 1) % n)));
    }
    for i in 0..n - 1 {
        edges.push((v(i), v(i + 1)));
        edges.push((w(i), w(i + 1)));
    }
    edges.push((v(n - 1), w(0)));
    edges.push((w(n - 1), v(0)));
    Graph::from_edges(4 * n, edges)
}

/// Goldberg snark on `8n` vertices.
///
/// Each block `i` is the Petersen graph with a 3-vertex path removed: a
/// 7-vertex fragment with two left, one middle and two right dangling edges.
/// Block `i`'s right pair is joined to block `i+1`'s left pair, and the middle
/// dangling edges go to an eighth vertex per block; those hub vertices form
/// an `n`-circuit. Layout: block `i` occupies `8i .. 8i+7`, hub vertex `8i+7`.
///
/// Structural gates (order, cubic, bridgeless, not 3-edge-colourable) are
/// checked here; the oddness and `mu_3` gate lives in the invariants layer.
pub fn goldberg_snark(n: usize) -> Result<Graph> {
    check_odd_param("Goldberg snark", n)?;
    // Petersen minus the path 0-1-2. Survivors 3..9 relabelled to 0..6.
    // Left ends: 4, 5 (ex-neighbours of 0); middle: 6 (of 1); right: 3, 7 (of 2).
    let local = |p: usize| p - 3;
    let inner: [(usize, usize); 8] = [(3, 4), (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9)];
    let hub = |i: usize| 8 * i + 7;
    let at = |i: usize, p: usize| 8 * i + local(p);
    let mut edges = Vec::with_capacity(12 * n);
    for i in 0..n {
        for &(a, b) in &inner {
            edges.push((at(i, a), at(i, b)));
        }
        edges.push((at(i, 6), hub(i)));
    }
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((at(i, 3), at(j, 4)));
        edges.push((at(i, 7), at(j, 5)));
        edges.push((hub(i), hub(j)));
    }
    let g = Graph::from_edges(8 * n, edges)?;
    if g.n() != 8 * n || !g.is_cubic() {
        return Err(Error::Gate(format!("Goldberg G_{n} is not a cubic graph of order {}", 8 * n)));
    }
    if !is_bridgeless(&g) {
        return Err(Error::Gate(format!("Goldberg G_{n} has a bridge")));
    }
    if is_3_edge_colorable(&g) {
        return Err(Error::Gate(format!("Goldberg G_{n} is 3-edge-colourable")));
    }
    Ok(g)
}
