//! graph6 and whitespace edge-list formats.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the graph6 reader.
pub const GRAPH6_MAX_ORDER: usize = 4096;

const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let six = |i: usize| (bytes[i] - 63) as usize;
    let (n, body_start) = if bytes[0] != 126 {
        (six(0), 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(g6_err("truncated order header"));
        }
        ((six(1) << 12) | (six(2) << 6) | six(3), 4)
    } else {
        if bytes.len() < 8 {
            return Err(g6_err("truncated order header"));
        }
        ((2..8).fold(0usize, |acc, i| (acc << 6) | six(i)), 8)
    };
    if n > GRAPH6_MAX_ORDER {
        return Err(g6_err(format!("order {n} exceeds the limit {GRAPH6_MAX_ORDER}")));
    }
    if n == 0 {
        return Err(g6_err("order 0 graphs are not supported"));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < need {
        return Err(g6_err(format!(
            "truncated bit vector: expected {need} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(g6_err(format!(
            "trailing data: expected {need} bytes, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = (body[k / 6] - 63) as usize;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::build(n, &edges)
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses a whitespace edge list: one `u v` pair per line, 0-based, with `#`
/// comments. The first line is read as an `n m` header when `m` equals the
/// number of following edge lines and `n` exceeds every label; otherwise the
/// order is one past the largest label.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut rows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::EdgeList(format!("line {}: bad token {t:?}", lineno + 1)))
            })
            .collect::<Result<_>>()?;
        if nums.len() != 2 {
            return Err(Error::EdgeList(format!(
                "line {}: expected two integers",
                lineno + 1
            )));
        }
        rows.push((nums[0], nums[1]));
    }
    if rows.is_empty() {
        return Err(Error::EdgeList("no edges and no header".into()));
    }
    let max_label = |edges: &[(usize, usize)]| edges.iter().map(|&(u, v)| u.max(v)).max();
    let (hn, hm) = rows[0];
    let rest = &rows[1..];
    let is_header = hm == rest.len() && max_label(rest).is_none_or(|m| hn > m);
    let (n, edges) = if is_header {
        (hn, rest)
    } else {
        (max_label(&rows).unwrap() + 1, &rows[..])
    };
    Graph::build(n, edges)
}

/// Writes `n m` followed by the sorted edges.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
