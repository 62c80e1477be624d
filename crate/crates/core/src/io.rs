//! The plain-text edge-list format.
//!
//! ```text
//! # optional comments
//! k 3
//! 1 2 3
//! 1 4 5
//! ```
//!
//! An optional first content line `k <k>` fixes the uniformity; otherwise it
//! is taken from the first edge. Each further line is one edge of
//! whitespace-separated vertex tokens. A token starting with `#` starts a
//! comment that runs to the end of the line, so `#` may appear inside a
//! token (`v#2`). CRLF line endings are accepted.

use crate::error::{Error, Result};
use crate::hypergraph::{build_hypergraph, Hypergraph};

/// Parses the edge-list format. Errors name the 1-based line.
pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut header: Option<usize> = None;
    let mut seen_content = false;
    let mut edges: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw
            .split_whitespace()
            .take_while(|t| !t.starts_with('#'))
            .collect();
        if tokens.is_empty() {
            continue;
        }
        if !seen_content && tokens.len() == 2 && tokens[0] == "k" {
            let k = tokens[1].parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("bad uniformity `{}`", tokens[1]),
            })?;
            header = Some(k);
            seen_content = true;
            continue;
        }
        seen_content = true;
        edges.push((line, tokens));
    }
    let k = match (header, edges.first()) {
        (Some(k), _) => k,
        (None, Some((_, first))) => first.len(),
        (None, None) => return Err(Error::EmptyEdgeList),
    };
    build_hypergraph(k, edges.iter().map(|(_, t)| t.iter())).map_err(|e| match e {
        Error::NonUniformEdge { edge, .. } | Error::DuplicateEdge { edge } => Error::AtLine {
            line: edges[edge].0,
            error: Box::new(e),
        },
        other => other,
    })
}

/// Writes `h` with a `k` header and one edge per line, vertices in index
/// order. Fails on tokens the parser could not read back.
pub fn serialize(h: &Hypergraph) -> Result<String> {
    if let Some(bad) = h
        .vertices()
        .iter()
        .find(|t| t.is_empty() || t.starts_with('#') || t.chars().any(char::is_whitespace))
    {
        return Err(Error::UnserializableToken(bad.clone()));
    }
    let mut out = format!("k {}\n", h.k());
    for j in 0..h.m() {
        out.push_str(&h.edge_tokens(j).join(" "));
        out.push('\n');
    }
    Ok(out)
}
