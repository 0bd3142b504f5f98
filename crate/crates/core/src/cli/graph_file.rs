//! Plain-text graph files.
//!
//! ```text
//! # comment
//! vertices 3
//! edge 1 2
//! edge 2 3
//! weight 3 2
//! ```
//!
//! `vertices` comes first and exactly once. Edges are oriented `U -> V`.
//! Weights default to 1; a repeated `weight` line for a vertex replaces the
//! earlier one with a warning.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: WeightedOrientedGraph,
    pub warnings: Vec<String>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn index(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    let mut n: Option<usize> = None;
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut weights: BTreeMap<usize, (u32, usize)> = BTreeMap::new();
    let mut warnings = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let directive = toks.next().unwrap();
        let in_range = |v: usize, n: usize| {
            if (1..=n).contains(&v) {
                Ok(v)
            } else {
                Err(err(line, format!("vertex {v} is outside 1..={n}")))
            }
        };
        match (directive, n) {
            ("vertices", None) => {
                let count = index(toks.next(), line, "vertex count")?;
                if count == 0 {
                    return Err(err(line, "a graph needs at least one vertex"));
                }
                n = Some(count);
            }
            ("vertices", Some(_)) => return Err(err(line, "`vertices` given twice")),
            ("edge" | "weight", None) => {
                return Err(err(line, format!("`{directive}` before `vertices`")))
            }
            ("edge", Some(n)) => {
                let u = in_range(index(toks.next(), line, "tail")?, n)?;
                let v = in_range(index(toks.next(), line, "head")?, n)?;
                if u == v {
                    return Err(err(line, format!("loop at vertex {u}")));
                }
                if edges.contains(&(v, u)) {
                    return Err(err(
                        line,
                        format!("edge {u} {v} is anti-parallel to edge {v} {u}"),
                    ));
                }
                if !edges.insert((u, v)) {
                    warnings.push(format!("line {line}: duplicate edge {u} {v} ignored"));
                }
            }
            ("weight", Some(n)) => {
                let v = in_range(index(toks.next(), line, "vertex")?, n)?;
                let w = index(toks.next(), line, "weight")?;
                let w = u32::try_from(w).map_err(|_| err(line, "weight too large"))?;
                if w == 0 {
                    return Err(err(line, "weights must be positive"));
                }
                if let Some((_, earlier)) = weights.insert(v, (w, line)) {
                    warnings.push(format!(
                        "line {line}: weight of vertex {v} replaces the one on line {earlier}"
                    ));
                }
            }
            _ => return Err(err(line, format!("unknown directive `{directive}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(err(line, format!("unexpected token `{extra}`")));
        }
    }
    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing `vertices`"))?;
    let edges: Vec<_> = edges.into_iter().collect();
    let weights: Vec<_> = weights.into_iter().map(|(v, (w, _))| (v, w)).collect();
    let graph = WeightedOrientedGraph::new(n, &edges, &weights)?;
    warnings.extend(graph.notes().iter().cloned());
    Ok(GraphFile { graph, warnings })
}

/// Inverse of [`parse_graph_file`]; only weights other than 1 are written.
pub fn render_graph_file(d: &WeightedOrientedGraph) -> String {
    let mut out = format!("vertices {}\n", d.n());
    for (u, v) in d.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    for v in 1..=d.n() {
        if d.weight(v) != 1 {
            writeln!(out, "weight {v} {}", d.weight(v)).unwrap();
        }
    }
    out
}
