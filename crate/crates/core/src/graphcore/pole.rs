use std::fmt::Write as _;

use super::{Graph, IndexMap};
use crate::error::{Error, Result};

/// A graph fragment whose terminals have degree 1 and whose other vertices
/// have degree 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pole {
    name: String,
    graph: Graph,
    terminals: Vec<usize>,
}

impl Pole {
    pub fn new(name: impl Into<String>, graph: Graph, terminals: Vec<usize>) -> Result<Self> {
        let mut is_terminal = vec![false; graph.n()];
        for &t in &terminals {
            if t >= graph.n() {
                return Err(Error::VertexOutOfRange(t));
            }
            if std::mem::replace(&mut is_terminal[t], true) {
                return Err(Error::InvalidPole(format!("terminal {t} listed twice")));
            }
        }
        for v in 0..graph.n() {
            let want = if is_terminal[v] { 1 } else { 3 };
            if graph.degree(v) != want {
                return Err(Error::InvalidPole(format!(
                    "vertex {v} has degree {}, expected {want}",
                    graph.degree(v)
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            graph,
            terminals,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &[usize] {
        &self.terminals
    }

    /// Number of non-terminal vertices.
    pub fn inner_order(&self) -> usize {
        self.graph.n() - self.terminals.len()
    }

    /// The terminal edge at terminal vertex `t`.
    pub fn terminal_edge(&self, t: usize) -> Result<usize> {
        if !self.terminals.contains(&t) {
            return Err(Error::NotATerminal(t));
        }
        Ok(self.graph.incident(t)[0])
    }

    /// Vertex-disjoint union; terminals of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Pole) -> Pole {
        let shift = self.graph.n();
        let mut terminals = self.terminals.clone();
        terminals.extend(other.terminals.iter().map(|t| t + shift));
        Pole {
            name: format!("{}+{}", self.name, other.name),
            graph: self.graph.disjoint_union(&other.graph),
            terminals,
        }
    }

    /// Identifies terminals `a` and `b` of this pole and suppresses the
    /// resulting bivalent vertex: both terminal edges merge into one new edge
    /// (appended last) between the former terminal neighbours.
    pub fn self_junction(&self, a: usize, b: usize) -> Result<(Pole, IndexMap)> {
        let ea = self.terminal_edge(a)?;
        let eb = self.terminal_edge(b)?;
        if a == b {
            return Err(Error::InvalidPole(format!("cannot join terminal {a} with itself")));
        }
        if ea == eb {
            return Err(Error::InvalidPole(format!(
                "terminals {a} and {b} span a bare edge; joining them leaves no vertex"
            )));
        }
        let x = self.graph.other(ea, a);
        let y = self.graph.other(eb, b);
        let (mut graph, map) = self.graph.delete(&[a, b], &[ea, eb]);
        let nx = map.vertices[x].expect("neighbour survives");
        let ny = map.vertices[y].expect("neighbour survives");
        graph.add_edge(nx, ny)?;
        let terminals = self
            .terminals
            .iter()
            .filter(|&&t| t != a && t != b)
            .map(|&t| map.vertices[t].expect("terminal survives"))
            .collect();
        Ok((
            Pole {
                name: self.name.clone(),
                graph,
                terminals,
            },
            map,
        ))
    }

    /// The closed cubic graph of a pole with no terminals left.
    pub fn into_graph(self) -> Result<Graph> {
        if !self.terminals.is_empty() {
            return Err(Error::Wiring(format!(
                "{} dangling terminal(s) remain",
                self.terminals.len()
            )));
        }
        Ok(self.graph)
    }
}

/// Junction of two poles on `(u1, u2)`; `u1` is a terminal vertex of `t1`,
/// `u2` of `t2`.
pub fn pole_junction(t1: &Pole, u1: usize, t2: &Pole, u2: usize) -> Result<Pole> {
    t1.terminal_edge(u1)?;
    t2.terminal_edge(u2)?;
    let joined = t1.disjoint_union(t2);
    Ok(joined.self_junction(u1, u2 + t1.graph.n())?.0)
}

fn pole_err(line: usize, msg: impl Into<String>) -> Error {
    Error::PoleFile { line, msg: msg.into() }
}

/// Parses the pole file format:
///
/// ```text
/// pole <name> <n> <m>
/// terminals <t1> ... <tk>
/// edge <u> <v>        (m lines)
/// ```
pub fn parse_pole(text: &str) -> Result<Pole> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| pole_err(1, "missing header"))?;
    let (name, n, m) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["pole", name, n, m] => (
            name.to_string(),
            n.parse::<usize>().map_err(|_| pole_err(hl, "bad vertex count"))?,
            m.parse::<usize>().map_err(|_| pole_err(hl, "bad edge count"))?,
        ),
        _ => return Err(pole_err(hl, "expected `pole <name> <n> <m>`")),
    };
    let (tl, tline) = lines.next().ok_or_else(|| pole_err(hl + 1, "missing terminals line"))?;
    let mut tfields = tline.split_whitespace();
    if tfields.next() != Some("terminals") {
        return Err(pole_err(tl, "expected `terminals <t1> ... <tk>`"));
    }
    let terminals = tfields
        .map(|t| t.parse::<usize>().map_err(|_| pole_err(tl, "bad terminal index")))
        .collect::<Result<Vec<_>>>()?;
    let mut graph = Graph::new(n);
    for (ln, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["edge", u, v] => {
                let u = u.parse::<usize>().map_err(|_| pole_err(ln, "bad vertex"))?;
                let v = v.parse::<usize>().map_err(|_| pole_err(ln, "bad vertex"))?;
                if u >= n || v >= n {
                    return Err(pole_err(ln, format!("vertex index out of range 0..{n}")));
                }
                graph.add_edge(u, v)?;
            }
            _ => return Err(pole_err(ln, "expected `edge <u> <v>`")),
        }
    }
    if graph.m() != m {
        return Err(pole_err(hl, format!("header declares {m} edges, found {}", graph.m())));
    }
    Pole::new(name, graph, terminals)
}

pub fn write_pole(p: &Pole) -> String {
    let mut s = String::new();
    writeln!(s, "pole {} {} {}", p.name, p.graph.n(), p.graph.m()).unwrap();
    s.push_str("terminals");
    for t in &p.terminals {
        write!(s, " {t}").unwrap();
    }
    s.push('\n');
    for &(u, v) in p.graph.edges() {
        writeln!(s, "edge {u} {v}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K4 with one edge subdivided and a dangling edge at the subdivision
    /// vertex: 5 inner vertices plus terminal 5.
    pub(crate) fn k4_one_pole() -> Pole {
        let g = Graph::from_edges(
            6,
            [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4), (4, 5)],
        )
        .unwrap();
        Pole::new("k4sub", g, vec![5]).unwrap()
    }

    #[test]
    fn degree_validation() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(Pole::new("e", g.clone(), vec![0, 1]).is_ok());
        assert!(Pole::new("e", g.clone(), vec![0]).is_err());
        assert!(Pole::new("e", g, vec![0, 0]).is_err());
    }

    #[test]
    fn two_one_poles_close_up() {
        let p = k4_one_pole();
        let j = pole_junction(&p, 5, &p, 5).unwrap();
        assert!(j.terminals().is_empty());
        let g = j.into_graph().unwrap();
        assert!(g.is_cubic());
        assert_eq!(g.n(), 6 + 6 - 2);
        assert_eq!(g.m(), 8 + 8 - 1);
        // the merged terminal edge is a bridge
        assert!(!crate::graphcore::is_bridgeless(&g));
    }

    #[test]
    fn not_a_terminal() {
        let p = k4_one_pole();
        assert_eq!(pole_junction(&p, 0, &p, 5), Err(Error::NotATerminal(0)));
    }

    #[test]
    fn bare_edge_self_junction_rejected() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let p = Pole::new("e", g, vec![0, 1]).unwrap();
        assert!(p.self_junction(0, 1).is_err());
    }

    #[test]
    fn pole_file_round_trip() {
        let p = k4_one_pole();
        let text = write_pole(&p);
        assert!(text.starts_with("pole k4sub 6 8\nterminals 5\nedge 0 1\n"));
        assert_eq!(parse_pole(&text).unwrap(), p);
        assert!(matches!(
            parse_pole("pole x 2 1\nterminals 0 1\nedge 0 5\n"),
            Err(Error::PoleFile { line: 3, .. })
        ));
    }
}
