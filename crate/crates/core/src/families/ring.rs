use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graphcore::{Graph, Pole};

/// One junction template: for every copy `i` in `copies`, join terminal
/// `from` of copy `i` with terminal `to` of copy `(i + offset) mod k`.
///
/// Terminals are addressed by position in the pole's terminal list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingLink {
    pub from: usize,
    pub to: usize,
    pub offset: usize,
    /// Half-open copy range; `None` means all copies.
    pub copies: Option<(usize, usize)>,
}

/// Ordered list of junction templates applied to `k` copies of a pole.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WiringPlan {
    pub links: Vec<RingLink>,
}

impl WiringPlan {
    /// The plain ring: terminal `right[j]` of copy `i` meets `left[j]` of copy
    /// `i + 1`.
    pub fn ring(pairs: &[(usize, usize)]) -> Self {
        Self {
            links: pairs
                .iter()
                .map(|&(from, to)| RingLink {
                    from,
                    to,
                    offset: 1,
                    copies: None,
                })
                .collect(),
        }
    }
}

/// Text form, one link per line: `link <from> <to> <offset> [<first> <end>]`.
impl FromStr for WiringPlan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut links = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Wiring(format!("line {}: expected `link <from> <to> <offset> [<first> <end>]`", i + 1));
            let mut f = line.split_whitespace();
            if f.next() != Some("link") {
                return Err(bad());
            }
            let nums = f
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            let link = match nums.as_slice() {
                [from, to, offset] => RingLink {
                    from: *from,
                    to: *to,
                    offset: *offset,
                    copies: None,
                },
                [from, to, offset, a, b] => RingLink {
                    from: *from,
                    to: *to,
                    offset: *offset,
                    copies: Some((*a, *b)),
                },
                _ => return Err(bad()),
            };
            links.push(link);
        }
        Ok(Self { links })
    }
}

impl fmt::Display for WiringPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.links {
            write!(f, "link {} {} {}", l.from, l.to, l.offset)?;
            if let Some((a, b)) = l.copies {
                write!(f, " {a} {b}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Closed cubic graph from `k` copies of `pole` joined by `plan`. Every
/// terminal of every copy must be consumed exactly once.
pub fn ring_family(pole: &Pole, k: usize, plan: &WiringPlan) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Parameter("ring needs at least one copy".into()));
    }
    let t = pole.terminals().len();
    let mut pairs = Vec::new();
    let mut used = vec![vec![false; t]; k];
    for link in &plan.links {
        if link.from >= t || link.to >= t {
            return Err(Error::Wiring(format!("terminal position out of range 0..{t}")));
        }
        let (a, b) = link.copies.unwrap_or((0, k));
        if a > b || b > k {
            return Err(Error::Wiring(format!("copy range {a}..{b} outside 0..{k}")));
        }
        for i in a..b {
            let j = (i + link.offset) % k;
            for (c, p) in [(i, link.from), (j, link.to)] {
                if std::mem::replace(&mut used[c][p], true) {
                    return Err(Error::Wiring(format!(
                        "terminal {p} of copy {c} is used twice"
                    )));
                }
            }
            pairs.push(((i, link.from), (j, link.to)));
        }
    }
    let dangling = used.iter().flatten().filter(|u| !**u).count();
    if dangling > 0 {
        return Err(Error::Wiring(format!("plan leaves {dangling} dangling terminal(s)")));
    }

    let mut acc = pole.clone();
    for _ in 1..k {
        acc = acc.disjoint_union(pole);
    }
    // current vertex id of terminal position p in copy c
    let mut id: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            pole.terminals()
                .iter()
                .map(|&v| v + c * pole.graph().n())
                .collect()
        })
        .collect();
    for ((c1, p1), (c2, p2)) in pairs {
        let (next, map) = acc.self_junction(id[c1][p1], id[c2][p2])?;
        for row in id.iter_mut() {
            // consumed terminals become usize::MAX and are never looked up again
            for v in row.iter_mut().filter(|v| **v != usize::MAX) {
                *v = map.vertices[*v].unwrap_or(usize::MAX);
            }
        }
        acc = next;
    }
    acc.into_graph()
}
