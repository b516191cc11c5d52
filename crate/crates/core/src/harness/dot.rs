use std::fmt::Write;

use crate::cores::{CoreDecomposition, PAIRS};
use crate::graphcore::Graph;

/// Graphviz text for `g`. With a decomposition, uncovered edges are bold,
/// doubly covered edges dashed and labelled with their matching pair
/// (1-based), triply covered edges drawn doubled; singly covered edges stay
/// plain.
pub fn dot_export(g: &Graph, d: Option<&CoreDecomposition>) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle, fontsize=10];\n");
    for v in 0..g.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let attrs = match d {
            None => String::new(),
            Some(d) if d.e0.contains(e) => " [style=bold, penwidth=3]".into(),
            Some(d) if d.e3.contains(e) => " [color=\"black:black\"]".into(),
            Some(d) => match (0..3).find(|&p| d.e_pair[p].contains(e)) {
                Some(p) => {
                    let (i, j) = PAIRS[p];
                    format!(" [style=dashed, label=\"{}{}\"]", i + 1, j + 1)
                }
                None => String::new(),
            },
        };
        writeln!(s, "  {u} -- {v}{attrs};").unwrap();
    }
    s.push_str("}\n");
    s
}
