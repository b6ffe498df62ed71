//! Deterministic online coloring: the session contract, the concrete
//! algorithms, and the parity-greedy level coloring.
//!
//! A session sees vertices one at a time, each with the positions of its
//! neighbors among the already-presented vertices, and assigns an
//! irrevocable color. Identical presentation prefixes always yield
//! identical color prefixes.

use crate::dfs::{self, DfsTree};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// Algorithm id plus parameters; a factory for sessions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgorithmSpec {
    /// Smallest color absent from the presented neighborhood.
    FirstFit,
    /// Color = position mod (ell + 1); proper on DFS paths when
    /// `ell >= l(G)`.
    ModuloLevel { ell: usize },
    /// Groups-of-four coloring for triangle-free paths with back edges.
    QuadGroup { ell: usize },
}

impl AlgorithmSpec {
    pub fn session(&self) -> Result<Session> {
        match *self {
            AlgorithmSpec::FirstFit => Ok(Session::new(Rule::FirstFit)),
            AlgorithmSpec::ModuloLevel { ell } => {
                if ell < 3 || ell % 2 == 0 {
                    return Err(Error::BadParameter(format!(
                        "modulo-level needs odd ell >= 3, got {ell}"
                    )));
                }
                Ok(Session::new(Rule::ModuloLevel { modulus: ell + 1 }))
            }
            AlgorithmSpec::QuadGroup { ell } => {
                if ell % 2 == 0 || ell < 5 {
                    return Err(Error::BadParameter(format!(
                        "quad-group needs odd ell >= 5, got {ell}"
                    )));
                }
                let ell_prime = if ell % 4 == 1 { ell + 3 } else { ell + 5 };
                Ok(Session::new(Rule::QuadGroup { ell_prime }))
            }
        }
    }

    /// Worst-case colors the algorithm can use on an `n`-vertex
    /// presentation.
    pub fn palette_bound(&self, n: usize) -> usize {
        match *self {
            AlgorithmSpec::FirstFit => n,
            AlgorithmSpec::ModuloLevel { ell } => (ell + 1).min(n.max(1)),
            AlgorithmSpec::QuadGroup { ell } => {
                let ell_prime = if ell % 4 == 1 { ell + 3 } else { ell + 5 };
                ell_prime / 2
            }
        }
    }
}

#[derive(Debug, Clone)]
enum Rule {
    FirstFit,
    ModuloLevel { modulus: usize },
    QuadGroup { ell_prime: usize },
}

/// A running online coloring session.
#[derive(Debug, Clone)]
pub struct Session {
    rule: Rule,
    colors: Vec<usize>,
}

impl Session {
    fn new(rule: Rule) -> Session {
        Session {
            rule,
            colors: Vec::new(),
        }
    }

    /// Present the next vertex; `earlier_neighbors` are positions (not
    /// ids) of its neighbors among the vertices presented so far.
    pub fn next(&mut self, earlier_neighbors: &[usize]) -> Result<usize> {
        let pos = self.colors.len();
        if let Some(&bad) = earlier_neighbors.iter().find(|&&p| p >= pos) {
            return Err(Error::BadParameter(format!(
                "neighbor position {bad} not yet presented (step {pos})"
            )));
        }
        let color = match self.rule {
            Rule::FirstFit => {
                let mut used: Vec<bool> = vec![false; earlier_neighbors.len() + 1];
                for &p in earlier_neighbors {
                    let c = self.colors[p];
                    if c < used.len() {
                        used[c] = true;
                    }
                }
                used.iter().position(|&u| !u).unwrap()
            }
            Rule::ModuloLevel { modulus } => pos % modulus,
            Rule::QuadGroup { ell_prime } => {
                let i = pos % ell_prime;
                let k = i / 4;
                if i == 4 * k || i == 4 * k + 2 {
                    2 * k
                } else {
                    2 * k + 1
                }
            }
        };
        self.colors.push(color);
        Ok(color)
    }

    /// Colors assigned so far, in presentation order.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }
}

/// An ordered vertex sequence with, for each vertex, the positions of its
/// neighbors among earlier vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    pub steps: Vec<Vec<usize>>,
}

impl Presentation {
    /// Present the vertices of `g` in the given order.
    pub fn from_order(g: &Graph, order: &[usize]) -> Presentation {
        let mut pos_of = vec![usize::MAX; g.n()];
        let mut steps = Vec::with_capacity(order.len());
        for (i, &v) in order.iter().enumerate() {
            let mut nbrs: Vec<usize> = g
                .neighbors(v)
                .iter()
                .filter_map(|&w| (pos_of[w] != usize::MAX).then(|| pos_of[w]))
                .collect();
            nbrs.sort_unstable();
            steps.push(nbrs);
            pos_of[v] = i;
        }
        Presentation { steps }
    }
}

/// Run a fresh session of `spec` over a whole presentation.
pub fn replay(spec: &AlgorithmSpec, p: &Presentation) -> Result<Coloring> {
    let mut session = spec.session()?;
    for step in &p.steps {
        session.next(step)?;
    }
    Ok(Coloring::new(session.colors().to_vec()))
}

/// Parity level coloring: odd depth levels greedily colored from one
/// palette of `l_count + 1` colors, even levels from a disjoint palette,
/// for at most `2 * l_count + 2` colors total. Components are colored
/// independently with the same palettes.
pub fn parity_greedy_levels(g: &Graph, l_count: usize) -> Result<Coloring> {
    let mut colors = vec![0usize; g.n()];
    for comp in g.components() {
        let root = comp[0];
        let t = dfs::dfs_tree(g, root)?;
        color_component_levels(g, &t, l_count, &mut colors)?;
    }
    Coloring::with_palette(colors, 2 * l_count + 2)
}

fn color_component_levels(
    g: &Graph,
    t: &DfsTree,
    l_count: usize,
    colors: &mut [usize],
) -> Result<()> {
    let lv = dfs::levels(t);
    let depth_count = lv.len();
    // level adjacency from edges inside the component
    let mut adjacent = vec![vec![false; depth_count]; depth_count];
    for &(u, v) in g.edges() {
        if let (Some(du), Some(dv)) = (t.depth(u), t.depth(v)) {
            adjacent[du][dv] = true;
            adjacent[dv][du] = true;
        }
    }
    let mut level_color = vec![usize::MAX; depth_count];
    for parity in [1usize, 0] {
        let offset = if parity == 1 { 0 } else { l_count + 1 };
        for i in (parity..depth_count).step_by(2) {
            let mut used = vec![false; l_count + 1];
            for j in (parity..i).step_by(2) {
                if adjacent[i][j] && level_color[j] != usize::MAX {
                    used[level_color[j] - offset] = true;
                }
            }
            let c = used.iter().position(|&u| !u).ok_or_else(|| {
                Error::BadParameter(format!(
                    "level {i} adjacent to more than {l_count} same-parity levels; L(G) input too small"
                ))
            })?;
            level_color[i] = offset + c;
        }
    }
    for (i, level) in lv.iter().enumerate() {
        for &v in level {
            colors[v] = level_color[i];
        }
    }
    Ok(())
}
