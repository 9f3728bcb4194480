//! The plain-text graph format.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The first non-blank, non-comment line is the header `n <N>`; every later
//! such line is an edge `<u> <v>` with `u, v < N`. LF and CRLF are accepted.

use std::collections::HashMap;

use thiserror::Error;
use urmatch_core::graph::{Edge, Graph};
use urmatch_core::matching::Matching;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed_header: expected `n <N>`, found {found:?}")]
    MalformedHeader { line: usize, found: String },
    #[error("missing_header: input has no `n <N>` line")]
    MissingHeader,
    #[error("line {line}: malformed_edge: expected `<u> <v>`, found {found:?}")]
    MalformedEdge { line: usize, found: String },
    #[error("line {line}: loop_rejected: {vertex} {vertex}")]
    LoopRejected { line: usize, vertex: usize },
    #[error("line {line}: vertex_out_of_range: {vertex} with n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: duplicate_edge: {edge} first given on line {first}")]
    DuplicateEdge {
        line: usize,
        edge: Edge,
        first: usize,
    },
    #[error("malformed_matching: {0}")]
    MalformedMatching(String),
}

impl ParseError {
    /// The stable error code, e.g. `duplicate_edge`.
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::MalformedHeader { .. } => "malformed_header",
            ParseError::MissingHeader => "missing_header",
            ParseError::MalformedEdge { .. } => "malformed_edge",
            ParseError::LoopRejected { .. } => "loop_rejected",
            ParseError::VertexOutOfRange { .. } => "vertex_out_of_range",
            ParseError::DuplicateEdge { .. } => "duplicate_edge",
            ParseError::MalformedMatching(_) => "malformed_matching",
        }
    }

    pub fn line(&self) -> Option<usize> {
        match *self {
            ParseError::MalformedHeader { line, .. }
            | ParseError::MalformedEdge { line, .. }
            | ParseError::LoopRejected { line, .. }
            | ParseError::VertexOutOfRange { line, .. }
            | ParseError::DuplicateEdge { line, .. } => Some(line),
            _ => None,
        }
    }
}

fn two_numbers(s: &str) -> Option<(&str, &str)> {
    let mut it = s.split_whitespace();
    let pair = (it.next()?, it.next()?);
    it.next().is_none().then_some(pair)
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut first_seen: HashMap<Edge, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let Some(n) = n else {
            n = two_numbers(s)
                .filter(|(tag, _)| *tag == "n")
                .and_then(|(_, v)| v.parse().ok());
            if n.is_none() {
                return Err(ParseError::MalformedHeader {
                    line,
                    found: s.to_string(),
                });
            }
            continue;
        };
        let malformed = || ParseError::MalformedEdge {
            line,
            found: s.to_string(),
        };
        let (a, b) = two_numbers(s).ok_or_else(malformed)?;
        let u: usize = a.parse().map_err(|_| malformed())?;
        let v: usize = b.parse().map_err(|_| malformed())?;
        if let Some(vertex) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(ParseError::VertexOutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(ParseError::LoopRejected { line, vertex: u });
        }
        let edge = Edge::new(u, v);
        if let Some(&first) = first_seen.get(&edge) {
            return Err(ParseError::DuplicateEdge { line, edge, first });
        }
        first_seen.insert(edge, line);
        edges.push(edge);
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::new(n, edges).expect("edges validated while parsing"))
}

/// Inverse of [`parse_graph`]: the header and one sorted edge per line.
pub fn render(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Parses `"u-v, u-v, ..."` into a matching of `g`.
pub fn parse_matching(g: &Graph, spec: &str) -> Result<Matching, ParseError> {
    let bad = |msg: String| ParseError::MalformedMatching(msg);
    let mut edges = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (a, b) = part
            .split_once('-')
            .ok_or_else(|| bad(format!("expected `u-v`, found {part:?}")))?;
        let u: usize = a
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad vertex in {part:?}")))?;
        let v: usize = b
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad vertex in {part:?}")))?;
        edges.push((u, v));
    }
    Matching::new(g, edges).map_err(|e| bad(e.to_string()))
}
