//! Simple undirected graphs with dense vertex ids and proper-coloring checks.

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// No self-loops, no duplicate edges. Adjacency lists are kept sorted
/// ascending and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges are collapsed,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = std::collections::BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            seen.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<(usize, usize)> = seen.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as (min, max) pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components, each a sorted vertex list; components ordered
    /// by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// BFS 2-coloring; `None` when some component has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by `vertices` (need not be sorted). Returns the
    /// graph on re-indexed vertices plus the map new-id -> old-id.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_ids: Vec<usize> = vertices.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
            }
        }
        let g = Graph::new(old_ids.len(), edges).expect("induced subgraph is well-formed");
        (g, old_ids)
    }
}

/// A total vertex coloring together with the palette size it draws from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    palette_size: usize,
}

impl Coloring {
    /// Palette size is taken as max color + 1.
    pub fn new(colors: Vec<usize>) -> Coloring {
        let palette_size = colors.iter().copied().max().map_or(0, |m| m + 1);
        Coloring {
            colors,
            palette_size,
        }
    }

    pub fn with_palette(colors: Vec<usize>, palette_size: usize) -> Result<Coloring> {
        if let Some(&c) = colors.iter().find(|&&c| c >= palette_size) {
            return Err(Error::BadParameter(format!(
                "color {c} outside palette of size {palette_size}"
            )));
        }
        Ok(Coloring {
            colors,
            palette_size,
        })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Outcome of checking a coloring against a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringVerdict {
    Proper,
    /// A monochromatic edge.
    Improper { witness: (usize, usize) },
}

/// Check that `c` is a proper coloring of `g`. A wrong-length color array
/// is a structural error, distinct from an improper coloring.
pub fn validate_coloring(g: &Graph, c: &Coloring) -> Result<ColoringVerdict> {
    if c.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: c.len(),
        });
    }
    for &(u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            return Ok(ColoringVerdict::Improper { witness: (u, v) });
        }
    }
    Ok(ColoringVerdict::Proper)
}

/// Shorthand used by tests and the CLI.
pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    matches!(validate_coloring(g, c), Ok(ColoringVerdict::Proper))
}
