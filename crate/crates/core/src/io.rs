//! Graph input/output: the JSON edge-list document and graph6.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// `{"n": 3, "edges": [[0, 1], [1, 2]]}` with 0-based vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeListDocument {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

impl EdgeListDocument {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeListDocument {
            n: g.order(),
            edges: g.edges().map(|e| [e.u, e.v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let doc: EdgeListDocument =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    doc.to_graph()
}

pub fn emit_edge_list(g: &Graph) -> String {
    serde_json::to_string(&EdgeListDocument::from_graph(g)).expect("edge list serializes")
}

const GRAPH6_HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::InvalidGraph6(format!("invalid character {:?}", b as char)));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::InvalidGraph6("empty input".into())),
        [126, 126, ..] => return Err(Error::InvalidGraph6("order too large".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::InvalidGraph6("truncated order field".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - BIAS) as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Error::InvalidGraph6(format!(
            "truncated bit field: expected {expected} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(Error::InvalidGraph6("trailing data after bit field".into()));
    }

    let bit_at = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses either input format: JSON when the text starts with `{`,
/// graph6 otherwise.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        parse_edge_list(trimmed)
    } else {
        let first = trimmed.lines().next().unwrap_or("");
        parse_graph6(first)
    }
}
