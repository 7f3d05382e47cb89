//! Edge list, DOT, DIMACS and JSON serialization.
//!
//! * edgelist: one `u v` line per edge, `u < v`, ascending, 0-based.
//! * dimacs: `p edge N M` header then `e u v` lines, 1-based.
//! * json: `{"n": N, "orders": [..], "edges": [[u, v], ..]}`; `orders` is
//!   present for power graphs only.
//! * dot: undirected `graph` with one node statement per vertex.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Edgelist,
    Dot,
    Dimacs,
    Json,
}

impl Format {
    pub const ALL: [Format; 4] = [Format::Edgelist, Format::Dot, Format::Dimacs, Format::Json];

    pub fn name(self) -> &'static str {
        match self {
            Format::Edgelist => "edgelist",
            Format::Dot => "dot",
            Format::Dimacs => "dimacs",
            Format::Json => "json",
        }
    }

    /// Guess from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "txt" | "edges" | "edgelist" | "el" => Some(Format::Edgelist),
            "dimacs" | "col" | "clq" => Some(Format::Dimacs),
            "json" => Some(Format::Json),
            "dot" | "gv" => Some(Format::Dot),
            _ => None,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Format::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFormat(s.to_string()))
    }
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orders: Option<Vec<u64>>,
    edges: Vec<[usize; 2]>,
}

/// Serializes `g`. `orders` is only used by the json format.
pub fn write_graph(g: &Graph, format: Format, orders: Option<&[u64]>, name: &str) -> Vec<u8> {
    let mut out = String::new();
    match format {
        Format::Edgelist => {
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        Format::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
        Format::Dot => {
            let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
            for v in 0..g.vertex_count() {
                let _ = writeln!(out, "  {v};");
            }
            for (u, v) in g.edges() {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            out.push_str("}\n");
        }
        Format::Json => {
            let doc = JsonGraph {
                n: g.vertex_count(),
                orders: orders.map(<[u64]>::to_vec),
                edges: g.edges().map(|(u, v)| [u, v]).collect(),
            };
            out = serde_json::to_string(&doc).expect("graph json");
            out.push('\n');
        }
    }
    out.into_bytes()
}

/// A graph read from text, with the element orders when the source had them.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub orders: Option<Vec<u64>>,
}

/// Parses edgelist, dimacs or json text. For edgelists the vertex count is
/// `max index + 1` unless `vertices` says otherwise.
pub fn read_graph(text: &str, format: Format, vertices: Option<usize>) -> Result<ParsedGraph> {
    match format {
        Format::Edgelist => read_edgelist(text, vertices),
        Format::Dimacs => read_dimacs(text),
        Format::Json => read_json(text),
        Format::Dot => Err(Error::UnknownFormat("dot (output only)".into())),
    }
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        message: "missing field".into(),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("`{tok}` is not a non-negative integer"),
    })
}

fn read_edgelist(text: &str, vertices: Option<usize>) -> Result<ParsedGraph> {
    let mut edges = Vec::new();
    let mut max_seen = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), i + 1)?;
        let v = parse_num(it.next(), i + 1)?;
        max_seen = Some(max_seen.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = match (vertices, max_seen) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    Ok(ParsedGraph {
        graph: Graph::from_edges(n, edges)?,
        orders: None,
    })
}

fn read_dimacs(text: &str) -> Result<ParsedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        let mut it = line.split_whitespace();
        match it.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "duplicate problem line".into(),
                    });
                }
                let _kind = it.next();
                let n = parse_num(it.next(), lineno)?;
                let m = parse_num(it.next(), lineno)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| Error::Parse {
                    line: lineno,
                    message: "edge before problem line".into(),
                })?;
                let u = parse_num(it.next(), lineno)?;
                let v = parse_num(it.next(), lineno)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("vertex out of range 1..={n}"),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("unknown line type `{other}`"),
                })
            }
        }
    }
    let (n, _) = header.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing problem line".into(),
    })?;
    Ok(ParsedGraph {
        graph: Graph::from_edges(n, edges)?,
        orders: None,
    })
}

fn read_json(text: &str) -> Result<ParsedGraph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    if let Some(orders) = &doc.orders {
        if orders.len() != doc.n {
            return Err(Error::InvalidGraph(format!(
                "{} orders for {} vertices",
                orders.len(),
                doc.n
            )));
        }
    }
    let graph = Graph::from_edges(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))?;
    Ok(ParsedGraph {
        graph,
        orders: doc.orders,
    })
}
