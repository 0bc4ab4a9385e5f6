//! graph6 (short form) and plain edge-list text formats.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
pub const MAX_GRAPH6_ORDER: usize = 62;

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// whitespace are ignored. Only the short form (n <= 62) is accepted.
pub fn parse_graph6(input: &[u8]) -> Result<Graph> {
    let mut bytes = input;
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
    }
    while let [rest @ .., last] = bytes {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedGraph6("empty record".into()))?;
    if let Some(b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {b:#04x} outside 63..=126"
        )));
    }
    let n = (first - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::MalformedGraph6(
            "long form (n > 62) is not supported".into(),
        ));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Short-form graph6 encoding, without header or newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::MalformedGraph6(format!(
            "n = {n} needs the long form"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                groups[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + groups.len());
    out.push((n as u8 + 63) as char);
    out.extend(groups.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Parses a corpus file: one graph6 record per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_graph6(l.as_bytes()))
        .collect()
}

/// Parses `u v` lines, with an optional first line `n <count>`.
///
/// Without a declared count the graph has `1 + max index` vertices.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let num = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::BadToken {
                line: lineno,
                token: t.to_string(),
            })
        };
        if !seen_content && tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(Error::BadToken {
                    line: lineno,
                    token: line.trim().to_string(),
                });
            }
            declared = Some(num(tokens[1])?);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(Error::BadToken {
                line: lineno,
                token: line.trim().to_string(),
            });
        }
        edges.push((num(tokens[0])?, num(tokens[1])?));
    }
    let n = match declared {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    Graph::new(n, edges)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
