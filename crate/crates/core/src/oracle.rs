//! Exhaustive-search oracles: cycle spectrum, longest path, exact chromatic
//! and clique numbers, forbidden-subgraph checks.
//!
//! Everything here is exponential and gated by an explicit vertex budget;
//! exceeding the budget is an error, never an approximation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// Default budget for cycle enumeration and chromatic number.
pub const DEFAULT_ORACLE_BUDGET: usize = 20;
/// Default budget for clique and forbidden-subgraph checks.
pub const DEFAULT_SUBGRAPH_BUDGET: usize = 30;

/// Exact cycle and path statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStats {
    /// Minimum cycle length, `None` for forests.
    pub girth: Option<usize>,
    /// All distinct cycle lengths, sorted.
    pub spectrum: Vec<usize>,
    /// Distinct odd cycle lengths, sorted.
    pub odd_lengths: Vec<usize>,
    /// Longest odd cycle length, `None` when bipartite.
    pub odd_circumference: Option<usize>,
    /// Longest simple path, in edges.
    pub longest_path: usize,
}

fn check_budget(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::BudgetExceeded {
            n: g.n(),
            limit,
        });
    }
    Ok(())
}

/// Distinct cycle lengths via bitmask path DP: for each anchor `s`, track
/// the possible endpoints of simple paths inside {s, .., n-1} starting at
/// `s`; a path end adjacent to `s` closes a cycle.
fn cycle_spectrum(g: &Graph) -> BTreeSet<usize> {
    let n = g.n();
    let mut lengths = BTreeSet::new();
    for s in 0..n {
        let m = n - s; // local ids: vertex v -> v - s
        if m < 3 {
            break;
        }
        let adj_local: Vec<u32> = (s..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| w >= s)
                    .fold(0u32, |acc, &w| acc | 1 << (w - s))
            })
            .collect();
        let mut ends: Vec<u32> = vec![0; 1 << m];
        ends[1] = 1; // path {s}, ending at s
        for mask in 1usize..(1 << m) {
            let e = ends[mask];
            if e == 0 || mask & 1 == 0 {
                continue;
            }
            let len = mask.count_ones() as usize;
            if len >= 3 && e & adj_local[0] != 0 && e & !1 != 0 {
                // some endpoint other than s is adjacent to s
                if e & adj_local[0] & !1 != 0 {
                    lengths.insert(len);
                }
            }
            let mut rest = e;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut cand = adj_local[v] & !(mask as u32);
                while cand != 0 {
                    let w = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    lengths
}

/// Longest simple path (in edges) via bitmask path DP over all vertices.
fn longest_path_exact(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut ends: Vec<u32> = vec![0; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 0;
    for mask in 1usize..(1 << n) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize - 1);
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut cand = adj[v] & !(mask as u32);
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

/// Exact cycle statistics by exhaustive enumeration.
pub fn cycle_stats(g: &Graph, limit: usize) -> Result<CycleStats> {
    check_budget(g, limit)?;
    let spectrum: Vec<usize> = cycle_spectrum(g).into_iter().collect();
    let odd_lengths: Vec<usize> = spectrum.iter().copied().filter(|l| l % 2 == 1).collect();
    Ok(CycleStats {
        girth: spectrum.first().copied(),
        odd_circumference: odd_lengths.last().copied(),
        longest_path: longest_path_exact(g),
        spectrum,
        odd_lengths,
    })
}

/// Distinct cycle lengths grouped by residue class mod `k`.
pub fn residue_cycle_counts(
    g: &Graph,
    k: usize,
    limit: usize,
) -> Result<BTreeMap<usize, BTreeSet<usize>>> {
    if k < 2 {
        return Err(Error::BadParameter(format!("modulus k must be >= 2, got {k}")));
    }
    let stats = cycle_stats(g, limit)?;
    let mut map: BTreeMap<usize, BTreeSet<usize>> =
        (0..k).map(|r| (r, BTreeSet::new())).collect();
    for &len in &stats.spectrum {
        map.get_mut(&(len % k)).unwrap().insert(len);
    }
    Ok(map)
}

fn colorable_with(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
    fn rec(g: &Graph, k: usize, v: usize, max_used: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        // symmetry breaking: never skip more than one fresh color
        let ceiling = k.min(max_used + 2);
        'next_color: for c in 0..ceiling {
            for &w in g.neighbors(v) {
                if w < v && colors[w] == c {
                    continue 'next_color;
                }
            }
            colors[v] = c;
            if rec(g, k, v + 1, max_used.max(c + 1), colors) {
                return true;
            }
        }
        false
    }
    rec(g, k, 0, 0, colors)
}

/// Smallest `k` admitting a proper `k`-coloring, with a witness.
pub fn chromatic_number_exact(g: &Graph, limit: usize) -> Result<(usize, Coloring)> {
    check_budget(g, limit)?;
    if g.n() == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let mut colors = vec![0; g.n()];
    for k in 1..=g.n() {
        if colorable_with(g, k, &mut colors) {
            return Ok((k, Coloring::new(colors)));
        }
    }
    unreachable!("every graph is n-colorable");
}

/// Exact maximum clique size via branch and bound.
pub fn clique_number_exact(g: &Graph, limit: usize) -> Result<usize> {
    check_budget(g, limit)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    fn expand(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            expand(adj, rest & adj[v], size + 1, best);
        }
    }
    let mut best = 1;
    expand(&adj, (1u64 << n) - 1, 0, &mut best);
    Ok(best)
}

/// Which fixed subgraph to look for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenSubgraph {
    Triangle,
    C5,
}

/// Exact detection of a triangle or a 5-cycle; returns a witness vertex
/// cycle when present.
pub fn forbidden_subgraph_check(
    g: &Graph,
    which: ForbiddenSubgraph,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    check_budget(g, limit)?;
    match which {
        ForbiddenSubgraph::Triangle => {
            for &(u, v) in g.edges() {
                for &w in g.neighbors(u) {
                    if w != v && g.has_edge(v, w) {
                        return Ok(Some(vec![u, v, w]));
                    }
                }
            }
            Ok(None)
        }
        ForbiddenSubgraph::C5 => Ok(find_cycle_of_length(g, 5)),
    }
}

/// First simple cycle of exactly `target` edges found by DFS, as a closed
/// vertex sequence (first vertex not repeated).
pub fn find_cycle_of_length(g: &Graph, target: usize) -> Option<Vec<usize>> {
    fn dfs(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        target: usize,
    ) -> bool {
        if path.len() == target {
            let last = *path.last().unwrap();
            return g.has_edge(last, start);
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            // anchor at the smallest vertex to cut duplicates
            if w <= start || on_path[w] {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if dfs(g, start, path, on_path, target) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }
    for start in 0..g.n() {
        let mut path = vec![start];
        let mut on_path = vec![false; g.n()];
        on_path[start] = true;
        if dfs(g, start, &mut path, &mut on_path, target) {
            return Some(path);
        }
    }
    None
}

/// First simple cycle whose length is `r` mod `k`, if any.
pub fn find_cycle_with_residue(g: &Graph, k: usize, r: usize, limit: usize) -> Result<Option<Vec<usize>>> {
    check_budget(g, limit)?;
    let stats = cycle_stats(g, limit)?;
    for &len in &stats.spectrum {
        if len % k == r % k {
            return Ok(find_cycle_of_length(g, len));
        }
    }
    Ok(None)
}
