//! Adaptive adversary forcing any deterministic online coloring algorithm
//! to open at least k bins on a triangle-free, k-colorable graph of k^2
//! vertices.
//!
//! The adversary keeps a hidden proper "true" coloring with colors from
//! [k]; the algorithm's output colors are called bins. Each new vertex is
//! made adjacent to every earlier vertex whose true color is the one
//! excluded from the current color set.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::online::AlgorithmSpec;
use crate::oracle::{forbidden_subgraph_check, ForbiddenSubgraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdversaryStep {
    /// Positions of earlier vertices revealed as neighbors.
    pub neighbors: Vec<usize>,
    /// Bin the algorithm chose.
    pub bin: usize,
    /// True color the adversary assigned.
    pub true_color: usize,
    /// Effective color-set index at assignment time.
    pub set_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdversaryTranscript {
    pub k: usize,
    pub steps: Vec<AdversaryStep>,
    pub graph: Graph,
    pub bins_used: usize,
}

impl AdversaryTranscript {
    pub fn true_coloring(&self) -> Coloring {
        Coloring::new(self.steps.iter().map(|s| s.true_color).collect())
    }

    /// Line-oriented text form, one step per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("adversary k={} steps={}\n", self.k, self.steps.len());
        for (i, s) in self.steps.iter().enumerate() {
            let nbrs: Vec<String> = s.neighbors.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!(
                "{i} nbrs={} bin={} color={} set={}\n",
                nbrs.join(","),
                s.bin,
                s.true_color,
                s.set_index
            ));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<AdversaryTranscript> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty transcript".into(),
        })?;
        let parse_kv = |line: usize, field: &str, token: Option<&str>| -> Result<usize> {
            let token = token.ok_or_else(|| Error::Parse {
                line,
                msg: format!("missing field {field}"),
            })?;
            token
                .strip_prefix(&format!("{field}="))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("bad field {field} in {token:?}"),
                })
        };
        let mut header_tokens = header.split_whitespace();
        if header_tokens.next() != Some("adversary") {
            return Err(Error::Parse {
                line: 1,
                msg: "expected 'adversary' header".into(),
            });
        }
        let k = parse_kv(1, "k", header_tokens.next())?;
        let n = parse_kv(1, "steps", header_tokens.next())?;
        let mut steps = Vec::with_capacity(n);
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut tok = line.split_whitespace();
            let _pos = tok.next();
            let nbrs_tok = tok.next().unwrap_or("");
            let nbrs_body = nbrs_tok.strip_prefix("nbrs=").ok_or_else(|| Error::Parse {
                line: lineno,
                msg: "missing nbrs field".into(),
            })?;
            let neighbors: Vec<usize> = if nbrs_body.is_empty() {
                Vec::new()
            } else {
                nbrs_body
                    .split(',')
                    .map(|p| {
                        p.parse().map_err(|_| Error::Parse {
                            line: lineno,
                            msg: format!("bad neighbor position {p:?}"),
                        })
                    })
                    .collect::<Result<_>>()?
            };
            let bin = parse_kv(lineno, "bin", tok.next())?;
            let true_color = parse_kv(lineno, "color", tok.next())?;
            let set_index = parse_kv(lineno, "set", tok.next())?;
            steps.push(AdversaryStep {
                neighbors,
                bin,
                true_color,
                set_index,
            });
        }
        if steps.len() != n {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header says {n} steps, found {}", steps.len()),
            });
        }
        Ok(rebuild(k, steps)?)
    }
}

fn rebuild(k: usize, steps: Vec<AdversaryStep>) -> Result<AdversaryTranscript> {
    let n = steps.len();
    let mut edges = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        for &p in &s.neighbors {
            if p >= i {
                return Err(Error::BadParameter(format!(
                    "step {i} references position {p}"
                )));
            }
            edges.push((p, i));
        }
    }
    let graph = Graph::new(n, edges)?;
    let bins: BTreeSet<usize> = steps.iter().map(|s| s.bin).collect();
    Ok(AdversaryTranscript {
        k,
        bins_used: bins.len(),
        steps,
        graph,
    })
}

/// Run the k^2-vertex adversary game against a fresh session of `spec`.
///
/// The algorithm must behave as a deterministic online coloring algorithm:
/// placing a vertex in a bin holding one of its revealed neighbors is a
/// contract violation.
pub fn run_adversary(spec: &AlgorithmSpec, k: usize) -> Result<AdversaryTranscript> {
    if k < 1 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    let mut session = spec.session()?;
    let mut true_colors: Vec<usize> = Vec::new();
    let mut bins: Vec<usize> = Vec::new();
    let mut bin_colors: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut advancements = 0usize;
    let mut steps = Vec::with_capacity(k * k);

    for t in 0..k * k {
        let excluded = advancements % k;
        let neighbors: Vec<usize> = (0..t).filter(|&p| true_colors[p] == excluded).collect();
        let bin = session.next(&neighbors)?;
        if neighbors.iter().any(|&p| bins[p] == bin) {
            return Err(Error::ContractViolation(format!(
                "step {t}: bin {bin} already holds a revealed neighbor"
            )));
        }
        let held = bin_colors.entry(bin).or_default();

        // smallest color of the current set absent from the bin; if the
        // bin exhausts the set, advance the set first
        let pick_from_set = |excl: usize, held: &BTreeSet<usize>| {
            (0..k).find(|&c| c != excl && !held.contains(&c))
        };
        let presented_color = excluded;
        let has_neighbors = !neighbors.is_empty();
        let color = match pick_from_set(excluded, held) {
            Some(c) => c,
            None => {
                advancements += 1;
                let excluded2 = advancements % k;
                pick_from_set(excluded2, held)
                    .filter(|&c| !has_neighbors || c != presented_color)
                    .or_else(|| {
                        (0..k).find(|&c| {
                            !held.contains(&c) && (!has_neighbors || c != presented_color)
                        })
                    })
                    .or_else(|| (0..k).find(|&c| !has_neighbors || c != presented_color))
                    .ok_or_else(|| {
                        Error::ContractViolation(format!(
                            "step {t}: adversary has no proper color left"
                        ))
                    })?
            }
        };
        let current = advancements % k;
        let was_complete = (0..k).all(|c| c == current || held.contains(&c));
        held.insert(color);
        let now_complete = (0..k).all(|c| c == current || held.contains(&c));
        if !was_complete && now_complete {
            advancements += 1;
        }
        true_colors.push(color);
        bins.push(bin);
        steps.push(AdversaryStep {
            neighbors,
            bin,
            true_color: color,
            set_index: current,
        });
    }
    rebuild(k, steps)
}

/// Independent transcript checker: triangle-freeness (exhaustive), proper
/// true coloring within k colors, bin sizes, and the bin count bound.
pub fn verify_transcript(t: &AdversaryTranscript) -> std::result::Result<(), String> {
    if let Ok(Some(tri)) =
        forbidden_subgraph_check(&t.graph, ForbiddenSubgraph::Triangle, usize::MAX)
    {
        return Err(format!("graph contains triangle {tri:?}"));
    }
    let coloring = t.true_coloring();
    for &(u, v) in t.graph.edges() {
        if coloring.color(u) == coloring.color(v) {
            return Err(format!("true coloring monochromatic on edge ({u}, {v})"));
        }
    }
    if let Some(&c) = coloring.colors().iter().find(|&&c| c >= t.k) {
        return Err(format!("true color {c} outside palette of {}", t.k));
    }
    let mut bin_sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &t.steps {
        *bin_sizes.entry(s.bin).or_default() += 1;
    }
    if let Some((&bin, &size)) = bin_sizes.iter().find(|&(_, &size)| size > t.k) {
        return Err(format!("bin {bin} holds {size} > k vertices"));
    }
    if !t.steps.is_empty() && bin_sizes.len() < t.k {
        return Err(format!(
            "only {} bins used, expected at least {}",
            bin_sizes.len(),
            t.k
        ));
    }
    Ok(())
}
