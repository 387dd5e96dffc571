//! The graph document format: one record per line.
//!
//! ```text
//! # comment
//! v <id> <mu> <nu>
//! e <id1> <id2> <mu> <nu>
//! ```
//!
//! Numbers are decimal literals with at most four fractional digits, read
//! exactly. Serialization emits vertices then edges, each lexicographically
//! sorted, with all values at four digits, so parse(serialize(g)) = g.

use std::fmt::Write as _;

use ivfg::{IvfGraph, ValidationReport, VertexId, VertexPair};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: vertex {id} already declared")]
    DuplicateVertex { line: usize, id: VertexId },
    #[error("line {line}: edge {edge} already declared")]
    DuplicateEdge { line: usize, edge: VertexPair },
    #[error("line {line}: edge endpoint {id} is not a declared vertex")]
    UnknownEndpoint { line: usize, id: VertexId },
    #[error("graph is not valid:\n{0}")]
    ValidationFailed(ValidationReport),
}

fn syntax(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        reason: reason.into(),
    }
}

/// Reads a document into a candidate graph: syntax and duplicate checks
/// only, so broken graphs can still be loaded and reported on.
pub fn parse_document(text: &str) -> Result<IvfGraph, ParseError> {
    let mut g = IvfGraph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", id, mu, nu] => {
                let id: VertexId = id.parse().map_err(|e| syntax(line, format!("{e}")))?;
                let weight = parse_weight(line, mu, nu)?;
                if g.add_vertex(id.clone(), weight).is_some() {
                    return Err(ParseError::DuplicateVertex { line, id });
                }
            }
            ["e", x, y, mu, nu] => {
                let x: VertexId = x.parse().map_err(|e| syntax(line, format!("{e}")))?;
                let y: VertexId = y.parse().map_err(|e| syntax(line, format!("{e}")))?;
                let weight = parse_weight(line, mu, nu)?;
                let edge = VertexPair::new(x.clone(), y.clone());
                if g.add_edge(x, y, weight).is_some() {
                    return Err(ParseError::DuplicateEdge { line, edge });
                }
            }
            _ => return Err(syntax(
                line,
                "expected `v <id> <mu> <nu>`, `e <id1> <id2> <mu> <nu>`, a comment or a blank line",
            )),
        }
    }
    Ok(g)
}

fn parse_weight(line: usize, mu: &str, nu: &str) -> Result<ivfg::MembershipInterval, ParseError> {
    let mu = mu.parse().map_err(|e| syntax(line, format!("{e}")))?;
    let nu = nu.parse().map_err(|e| syntax(line, format!("{e}")))?;
    Ok(ivfg::MembershipInterval::new(mu, nu))
}

/// Reads a document and requires a valid graph: edge endpoints must be
/// declared (reported with their line number) and the result must pass
/// validation.
pub fn parse_validated(text: &str) -> Result<IvfGraph, ParseError> {
    let g = parse_document(text)?;

    for (i, raw) in text.lines().enumerate() {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if let ["e", x, y, ..] = tokens.as_slice() {
            for endpoint in [x, y] {
                let id: VertexId = endpoint.parse().expect("parsed once already");
                if !g.has_vertex(&id) {
                    return Err(ParseError::UnknownEndpoint { line: i + 1, id });
                }
            }
        }
    }

    let report = g.validate();
    if !report.is_valid() {
        return Err(ParseError::ValidationFailed(report));
    }
    Ok(g)
}

/// Renders a graph as a document that parses back to an equal graph.
pub fn serialize(g: &IvfGraph) -> String {
    let mut out = String::new();
    for (id, weight) in g.vertices() {
        writeln!(out, "v {id} {} {}", weight.mu, weight.nu).expect("string write");
    }
    for (pair, weight) in g.edges() {
        writeln!(
            out,
            "e {} {} {} {}",
            pair.first(),
            pair.second(),
            weight.mu,
            weight.nu
        )
        .expect("string write");
    }
    out
}
