use crate::error::{Error, Result};
use crate::graphcore::{is_bipartite, is_connected, junction_3, Graph};

/// Replaces each listed vertex of `h` by a copy of the bipartite cubic graph
/// `t`, one 3-junction at a time. `at` names vertices of the original `h`;
/// their positions are tracked through every junction. The junction vertex
/// of `t` is vertex 0, neighbours paired in ascending index order.
pub fn bipartite_inflate(h: &Graph, t: &Graph, at: &[usize]) -> Result<Graph> {
    if !t.is_cubic() || !is_bipartite(t) || !is_connected(t) {
        return Err(Error::Parameter(
            "inflation graph must be connected, bipartite and cubic".into(),
        ));
    }
    if !h.is_cubic() {
        return Err(Error::NotCubic);
    }
    let mut pos: Vec<Option<usize>> = (0..h.n()).map(Some).collect();
    let mut g = h.clone();
    for &v in at {
        let cur = pos
            .get(v)
            .copied()
            .flatten()
            .ok_or(Error::VertexOutOfRange(v))?;
        let j = junction_3(&g, cur, None, t, 0, None)?;
        for p in pos.iter_mut() {
            *p = p.and_then(|x| j.left.vertices[x]);
        }
        g = j.graph;
    }
    Ok(g)
}
