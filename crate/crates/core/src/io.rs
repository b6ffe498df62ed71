//! Text formats: whitespace edge lists, a DIMACS .col subset, and
//! vertex-coloring files. Parsing canonicalizes to dense 0-based ids and
//! reports the re-index map when the input had gaps.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// One `u v` pair per line; `#` comments and blank lines ignored.
    EdgeList,
    /// DIMACS .col subset: `c` comments, `p edge n m`, `e u v` (1-based).
    Dimacs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub name: String,
    pub provenance: String,
    /// new id -> original id, present when the input ids had gaps.
    pub reindex: Option<Vec<usize>>,
    pub warnings: Vec<String>,
}

impl GraphDocument {
    pub fn new(graph: Graph, name: &str, provenance: &str) -> GraphDocument {
        GraphDocument {
            graph,
            name: name.to_string(),
            provenance: provenance.to_string(),
            reindex: None,
            warnings: Vec::new(),
        }
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        tok.and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("expected 'u v', got {line:?}"),
        })
    };
    let u = parse(it.next())?;
    let v = parse(it.next())?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("trailing tokens in {line:?}"),
        });
    }
    Ok((u, v))
}

pub fn parse_graph(input: &str, format: GraphFormat, name: &str) -> Result<GraphDocument> {
    match format {
        GraphFormat::EdgeList => parse_edgelist(input, name),
        GraphFormat::Dimacs => parse_dimacs(input, name),
    }
}

fn parse_edgelist(input: &str, name: &str) -> Result<GraphDocument> {
    let mut raw_edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (u, v) = parse_pair(line_no, body)?;
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        raw_edges.push((u, v, line_no));
    }
    // dense re-indexing
    let mut ids: Vec<usize> = raw_edges.iter().flat_map(|&(u, v, _)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let id_map: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut warnings = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::new();
    for (u, v, line_no) in raw_edges {
        let e = (id_map[&u].min(id_map[&v]), id_map[&u].max(id_map[&v]));
        if !seen.insert(e) {
            warnings.push(format!("line {line_no}: duplicate edge {u} {v}, deduplicated"));
        } else {
            edges.push(e);
        }
    }
    let n = ids.len();
    let dense = ids.iter().enumerate().all(|(i, &v)| i == v);
    Ok(GraphDocument {
        graph: Graph::new(n, edges)?,
        name: name.to_string(),
        provenance: "edgelist".to_string(),
        reindex: (!dense).then_some(ids),
        warnings,
    })
}

fn parse_dimacs(input: &str, name: &str) -> Result<GraphDocument> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut warnings = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            let mut it = rest.split_whitespace();
            if it.next() != Some("edge") {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "expected 'p edge n m'".into(),
                });
            }
            n = Some(it.next().and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "bad vertex count".into(),
            })?);
        } else if let Some(rest) = line.strip_prefix("e ") {
            let (u, v) = parse_pair(line_no, rest)?;
            if u == 0 || v == 0 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "DIMACS vertex ids are 1-based".into(),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            let e = ((u - 1).min(v - 1), (u - 1).max(v - 1));
            if !seen.insert(e) {
                warnings.push(format!("line {line_no}: duplicate edge, deduplicated"));
            } else {
                edges.push(e);
            }
        } else {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("unrecognized line {line:?}"),
            });
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 1,
        msg: "missing 'p edge' header".into(),
    })?;
    Ok(GraphDocument {
        graph: Graph::new(n, edges)?,
        name: name.to_string(),
        provenance: "dimacs".to_string(),
        reindex: None,
        warnings,
    })
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => {
            let mut out = String::new();
            for &(u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
        GraphFormat::Dimacs => {
            let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
            for &(u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
            out
        }
    }
}

/// Coloring file: `<vertex> <color>` per line, `#` comments; every vertex
/// of the graph must appear exactly once.
pub fn parse_coloring(input: &str, n: usize) -> Result<Coloring> {
    let mut colors = vec![usize::MAX; n];
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (v, c) = parse_pair(line_no, body)?;
        if v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} out of range (n = {n})"),
            });
        }
        if colors[v] != usize::MAX {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} colored twice"),
            });
        }
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == usize::MAX) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("vertex {v} has no color"),
        });
    }
    Ok(Coloring::new(colors))
}

pub fn emit_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, &col) in c.colors().iter().enumerate() {
        out.push_str(&format!("{v} {col}\n"));
    }
    out
}
