//! Edge-list text format.
//!
//! ```text
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```
//!
//! Whitespace-separated, LF-terminated. The reader also accepts `u > v`
//! and trailing blank lines; the writer always emits the canonical form
//! (each edge as `u < v`, edges sorted).

use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed header {0:?}: expected \"n m\"")]
    MalformedHeader(String),
    #[error("line {line}: malformed edge {text:?}: expected \"u v\"")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
}

pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::MalformedHeader(String::new()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| ParseError::MalformedHeader(header.into()))?;

    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (idx, text) in lines {
        let line = idx + 1;
        let (u, v) = parse_pair(text).ok_or_else(|| ParseError::MalformedEdge {
            line,
            text: text.into(),
        })?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let (u, v) = (u.min(v), u.max(v));
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
