//! Text formats: the edge list, Graphviz dot, and the JSON trace document.
//!
//! Edge list grammar (1-based labels, newline-terminated):
//!
//! ```text
//! n m
//! u v        (m lines, u < v, lexicographically sorted)
//! ```

use std::fmt::Write as _;

use kreg_core::{ConstructionTrace, Graph, RegularityClass};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document edges do not form a simple graph: {0}")]
    Graph(#[from] kreg_core::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

pub fn encode_edgelist(g: &Graph) -> String {
    let mut out = String::with_capacity(12 * (g.edge_count() + 1));
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize), FormatError> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize, FormatError> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(lineno, format!("{what}: expected two integers")))?;
        tok.parse().map_err(|_| {
            parse_err(
                lineno,
                format!("{what}: `{tok}` is not a non-negative integer"),
            )
        })
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(parse_err(lineno, format!("{what}: trailing fields")));
    }
    Ok(pair)
}

pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = parse_pair(header, 1, "header")?;
    if n == 0 {
        return Err(parse_err(1, "header: vertex count must be positive"));
    }
    let mut g = Graph::empty(n)?;
    for _ in 0..m {
        let (lineno, line) = lines.next().ok_or_else(|| {
            parse_err(
                g.edge_count() + 2,
                format!("expected {m} edges, found {}", g.edge_count()),
            )
        })?;
        let (u, v) = parse_pair(line, lineno, "edge")?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(parse_err(
                lineno,
                format!("edge ({u},{v}) has a label outside 1..={n}"),
            ));
        }
        g.add_edge(u, v).map_err(|e| match e {
            kreg_core::Error::SelfLoop(w) => parse_err(lineno, format!("self-loop at vertex {w}")),
            kreg_core::Error::DuplicateEdge(a, b) => {
                parse_err(lineno, format!("duplicate edge ({a},{b})"))
            }
            other => parse_err(lineno, other.to_string()),
        })?;
    }
    if let Some((lineno, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(parse_err(
            lineno,
            format!("unexpected content after {m} edges: `{line}`"),
        ));
    }
    Ok(g)
}

/// Undirected dot document. Isolated vertices are declared as nodes.
pub fn encode_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for (i, d) in g.degrees().enumerate() {
        if d == 0 {
            writeln!(out, "  {};", i + 1).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn encode_trace(trace: &ConstructionTrace) -> String {
    let mut s = serde_json::to_string(trace).expect("trace serializes");
    s.push('\n');
    s
}

pub fn parse_trace(text: &str) -> Result<ConstructionTrace, FormatError> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub n: usize,
    pub k: usize,
    pub class: RegularityClass,
    pub edge_count: usize,
    pub tool_version: String,
}

/// A built graph with its metadata and, optionally, its construction trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub metadata: Metadata,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<ConstructionTrace>,
}

impl OutputDocument {
    pub fn new(
        g: &Graph,
        k: usize,
        class: RegularityClass,
        trace: Option<ConstructionTrace>,
    ) -> Self {
        OutputDocument {
            metadata: Metadata {
                n: g.vertex_count(),
                k,
                class,
                edge_count: g.edge_count(),
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            },
            edges: g.edges().collect(),
            trace,
        }
    }

    pub fn encode(&self) -> String {
        let mut s = serde_json::to_string(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn graph(&self) -> Result<Graph, FormatError> {
        Ok(Graph::from_edges(
            self.metadata.n,
            self.edges.iter().copied(),
        )?)
    }
}
