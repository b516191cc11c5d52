//! Text encodings: graph6 for simple graphs, a line-oriented edge list for
//! multigraphs.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column,
//! pairs `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, each byte
//! offset by 63. The vertex count comes first: one byte for `n <= 62`,
//! `126` plus three bytes for `n <= 258047`, `126 126` plus six bytes above.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: usize = (1 << 36) - 1;

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn decode_header(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| g6_err("empty record"))?;
    if first != 126 {
        return Ok(((first - OFFSET) as usize, 1));
    }
    let (width, skip) = if bytes.get(1) == Some(&126) { (6, 2) } else { (3, 1) };
    let chunk = bytes
        .get(skip..skip + width)
        .ok_or_else(|| g6_err("truncated vertex-count header"))?;
    let n = chunk
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
    let canonical = match width {
        3 => n > MAX_SHORT,
        _ => n > MAX_MEDIUM,
    };
    if !canonical {
        return Err(g6_err(format!("non-canonical header for n = {n}")));
    }
    Ok((n, skip + width))
}

fn encode_header(n: usize, out: &mut Vec<u8>) {
    if n <= MAX_SHORT {
        out.push(n as u8 + OFFSET);
        return;
    }
    let width = if n <= MAX_MEDIUM { 3 } else { 6 };
    out.push(126);
    if width == 6 {
        out.push(126);
    }
    for k in (0..width).rev() {
        out.push(((n >> (6 * k)) & 0x3f) as u8 + OFFSET);
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` prefix and trailing
/// whitespace are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b} outside [63, 126]")));
    }
    let (n, start) = decode_header(bytes)?;
    if n > MAX_LONG {
        return Err(g6_err("vertex count too large"));
    }
    let body = &bytes[start..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(g6_err("nonzero padding bits"));
        }
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a simple graph as a graph6 record (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    let mut adj = vec![false; n * n.saturating_sub(1) / 2];
    // column-major index of pair (i, j), i < j
    let idx = |i: usize, j: usize| j * (j - 1) / 2 + i;
    for &(u, v) in g.edges() {
        adj[idx(u, v)] = true;
    }
    let mut out = Vec::with_capacity(8 + adj.len() / 6);
    encode_header(n, &mut out);
    for chunk in adj.chunks(6) {
        let mut byte = 0u8;
        for (p, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - p);
            }
        }
        out.push(byte + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

fn el_err(line: usize, msg: impl Into<String>) -> Error {
    Error::EdgeList { line, msg: msg.into() }
}

/// Parses the edge-list format: a `graph <n> <m>` header followed by `m`
/// lines `<u> <v>`. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| el_err(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        ["graph", n, m] => (
            n.parse::<usize>().map_err(|_| el_err(hl, "bad vertex count"))?,
            m.parse::<usize>().map_err(|_| el_err(hl, "bad edge count"))?,
        ),
        _ => return Err(el_err(hl, "expected `graph <n> <m>`")),
    };
    let mut g = Graph::new(n);
    for (ln, line) in lines {
        let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => (u, v),
            _ => return Err(el_err(ln, "expected `<u> <v>`")),
        };
        if u >= n || v >= n {
            return Err(el_err(ln, format!("vertex index out of range 0..{n}")));
        }
        g.add_edge(u, v)?;
    }
    if g.m() != m {
        return Err(el_err(hl, format!("header declares {m} edges, found {}", g.m())));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "graph {} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Parses either format: a record starting with `graph ` is an edge list,
/// anything else is a single graph6 line.
pub fn parse_any(text: &str) -> Result<Graph> {
    let t = text.trim_start();
    if t.starts_with("graph ") || t.starts_with('#') {
        parse_edge_list(t)
    } else {
        parse_graph6(t.trim())
    }
}
