//! graph6 and JSON adjacency encodings.
//!
//! graph6 follows the format described with nauty: a size prefix `N(n)`
//! followed by the upper triangle of the adjacency matrix, column by column,
//! packed six bits per printable byte (offset 63).

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Parses a single graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bad = |msg: &str| Error::Graph6(format!("{msg} in {s:?}"));
    let t = s.trim();
    let t = t.strip_prefix(HEADER).unwrap_or(t);
    let bytes = t.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b} outside 63..=126")));
    }
    let digits = |range: &[u8]| range.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated size"));
        }
        (digits(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated size"));
        }
        (digits(&bytes[2..8]), &bytes[8..])
    };
    let mut g = Graph::new(n)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(&format!("expected {expected} data bytes, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if bit(pad) {
            return Err(bad("non-zero padding bits"));
        }
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(raw.n, &edges).map_err(serde::de::Error::custom)
    }
}

/// Parses the `{"n": .., "edges": [[u, v], ..]}` form.
pub fn from_json(s: &str) -> Result<Graph> {
    serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization is infallible")
}

/// Accepts either a JSON object or a graph6 string.
pub fn parse_graph(s: &str) -> Result<Graph> {
    if s.trim_start().starts_with('{') {
        from_json(s)
    } else {
        from_graph6(s)
    }
}
