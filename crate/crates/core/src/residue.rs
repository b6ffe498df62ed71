//! Colorings for graphs with few cycle lengths in a fixed residue class
//! mod k, built on DFS depth classes. Each colorer either stays within its
//! bound or returns witness cycles refuting the hypothesis, so the result
//! is a certificate either way.

use crate::dfs::{self, DfsTree};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::online::AlgorithmSpec;
use crate::oracle;

/// Vertices grouped by DFS depth mod k, for one component tree.
#[derive(Debug, Clone)]
pub struct ResidueClasses {
    pub k: usize,
    /// classes[i] = vertices at depth = i (mod k), sorted by (depth, id).
    pub classes: Vec<Vec<usize>>,
}

pub fn residue_classes(t: &DfsTree, k: usize) -> Result<ResidueClasses> {
    if k < 2 {
        return Err(Error::BadParameter(format!("modulus k must be >= 2, got {k}")));
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut members: Vec<(usize, usize)> = t
        .preorder()
        .iter()
        .map(|&v| (t.depth(v).unwrap(), v))
        .collect();
    members.sort_unstable();
    for (d, v) in members {
        classes[d % k].push(v);
    }
    Ok(ResidueClasses { k, classes })
}

fn closed_tree_cycle(t: &DfsTree, ancestor: usize, descendant: usize) -> Vec<usize> {
    t.tree_path(ancestor, descendant)
        .expect("witness endpoints are tree-comparable")
}

/// Residue-1 coloring: First Fit per depth class mod k, disjoint palettes,
/// at most `(r + 1) * k` colors when the graph has at most `r` distinct
/// cycle lengths = 1 (mod k).
pub fn color_residue1(g: &Graph, k: usize, r: usize) -> Result<Coloring> {
    if k < 2 {
        return Err(Error::BadParameter(format!("modulus k must be >= 2, got {k}")));
    }
    let mut colors = vec![usize::MAX; g.n()];
    for comp in g.components() {
        let t = dfs::dfs_tree(g, comp[0])?;
        let rc = residue_classes(&t, k)?;
        for (i, class) in rc.classes.iter().enumerate() {
            let offset = i * (r + 1);
            for &v in class {
                // colored same-class neighbors are ancestors of v
                let mut used = vec![false; r + 1];
                let mut colored_neighbors = Vec::new();
                for &w in g.neighbors(v) {
                    if colors[w] != usize::MAX && t.contains(w) && t.depth(w).unwrap() % k == i {
                        colored_neighbors.push(w);
                        let c = colors[w] - offset;
                        if c < used.len() {
                            used[c] = true;
                        }
                    }
                }
                match used.iter().position(|&u| !u) {
                    Some(c) => colors[v] = offset + c,
                    None => {
                        // r + 1 ancestors at distinct depths: r + 1 distinct
                        // cycle lengths = 1 (mod k)
                        colored_neighbors.sort_unstable_by_key(|&w| t.depth(w).unwrap());
                        let witnesses: Vec<Vec<usize>> = colored_neighbors
                            .iter()
                            .take(r + 1)
                            .map(|&w| closed_tree_cycle(&t, w, v))
                            .collect();
                        return Err(Error::HypothesisViolation {
                            modulus: k,
                            residue: 1,
                            count: r + 1,
                            witnesses,
                        });
                    }
                }
            }
        }
    }
    Coloring::with_palette(colors, (r + 1) * k)
}

/// Residue-2 coloring: DFS root-to-leaf paths fed to First Fit, at most
/// `s*k + k + 1` colors when at most `s` distinct cycle lengths are
/// = 2 (mod k).
pub fn color_residue2(g: &Graph, k: usize, s: usize) -> Result<Coloring> {
    if k < 2 {
        return Err(Error::BadParameter(format!("modulus k must be >= 2, got {k}")));
    }
    let bound = s * k + k + 1;
    let mut colors = vec![usize::MAX; g.n()];
    for comp in g.components() {
        let t = dfs::dfs_tree(g, comp[0])?;
        for path in dfs::root_to_leaf_paths(&t).paths {
            let mut session = AlgorithmSpec::FirstFit.session()?;
            for (j, &v) in path.iter().enumerate() {
                let nbrs: Vec<usize> = (0..j).filter(|&i| g.has_edge(path[i], v)).collect();
                let c = session.next(&nbrs)?;
                if c >= bound {
                    return Err(residue2_witness(g, &t, &path, j, k, s));
                }
                if colors[v] == usize::MAX {
                    colors[v] = c;
                } else {
                    debug_assert_eq!(colors[v], c, "shared prefix must replay identically");
                }
            }
        }
    }
    Coloring::with_palette(colors, bound)
}

/// First Fit needed more than `s*k + k` adjacent ancestors for `path[j]`;
/// some depth residue class holds at least `s + 2` of them, and pairing
/// the shallowest with the rest gives `s + 1` cycles of distinct lengths
/// = 2 (mod k).
fn residue2_witness(g: &Graph, t: &DfsTree, path: &[usize], j: usize, k: usize, s: usize) -> Error {
    let v = path[j];
    let ancestors: Vec<usize> = (0..j).filter(|&i| g.has_edge(path[i], v)).map(|i| path[i]).collect();
    let mut by_residue: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &w in &ancestors {
        by_residue[t.depth(w).unwrap() % k].push(w);
    }
    let class = by_residue
        .into_iter()
        .find(|c| c.len() >= s + 2)
        .expect("s*k + k + 1 ancestors force a class of size s + 2");
    let w1 = class[0]; // shallowest: path order is increasing depth
    let witnesses: Vec<Vec<usize>> = class[1..s + 2]
        .iter()
        .map(|&wj| {
            // cycle v -> w1 -> ... -> wj -> v along the tree path
            let mut cycle = vec![v];
            cycle.extend(closed_tree_cycle(t, w1, wj));
            cycle
        })
        .collect();
    Error::HypothesisViolation {
        modulus: k,
        residue: 2,
        count: s + 1,
        witnesses,
    }
}

/// Residue-3 coloring: depth classes mod k are acyclic when no cycle length
/// is = 3 (mod k); 2-color each class forest, 2k colors total.
///
/// `witness_limit` caps the exhaustive search used to extract a witness
/// cycle when a class is not acyclic.
pub fn color_residue3(g: &Graph, k: usize, witness_limit: usize) -> Result<Coloring> {
    if k < 2 {
        return Err(Error::BadParameter(format!("modulus k must be >= 2, got {k}")));
    }
    let mut colors = vec![usize::MAX; g.n()];
    for comp in g.components() {
        let t = dfs::dfs_tree(g, comp[0])?;
        let rc = residue_classes(&t, k)?;
        for (i, class) in rc.classes.iter().enumerate() {
            let (h, old_id) = g.induced(class);
            if has_cycle(&h) {
                let witness = oracle::find_cycle_with_residue(g, k, 3, witness_limit)?
                    .ok_or_else(|| {
                        Error::ContractViolation(
                            "depth class contains a cycle but no 3 (mod k) cycle found".into(),
                        )
                    })?;
                return Err(Error::HypothesisViolation {
                    modulus: k,
                    residue: 3,
                    count: 1,
                    witnesses: vec![witness],
                });
            }
            // 2-color the forest by parity from each tree's min-id root
            let offset = 2 * i;
            let mut side = vec![u8::MAX; h.n()];
            for root in 0..h.n() {
                if side[root] != u8::MAX {
                    continue;
                }
                side[root] = 0;
                let mut stack = vec![root];
                while let Some(v) = stack.pop() {
                    for &w in h.neighbors(v) {
                        if side[w] == u8::MAX {
                            side[w] = 1 - side[v];
                            stack.push(w);
                        }
                    }
                }
            }
            for (v_local, &v_old) in old_id.iter().enumerate() {
                colors[v_old] = offset + side[v_local] as usize;
            }
        }
    }
    Coloring::with_palette(colors, 2 * k)
}

fn has_cycle(g: &Graph) -> bool {
    // a forest has fewer edges than vertices in every component
    let mut visited = vec![false; g.n()];
    for start in 0..g.n() {
        if visited[start] {
            continue;
        }
        let mut vs = 0usize;
        let mut deg_sum = 0usize;
        let mut stack = vec![start];
        visited[start] = true;
        while let Some(v) = stack.pop() {
            vs += 1;
            deg_sum += g.degree(v);
            for &w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    stack.push(w);
                }
            }
        }
        if deg_sum / 2 >= vs {
            return true;
        }
    }
    false
}

/// Check that a witness is a genuine simple cycle of `g` with length
/// `r` (mod k).
pub fn check_cycle_witness(g: &Graph, cycle: &[usize], k: usize, r: usize) -> bool {
    if cycle.len() < 3 || cycle.len() % k != r % k {
        return false;
    }
    let mut distinct = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != cycle.len() {
        return false;
    }
    cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .all(|(&a, &b)| g.has_edge(a, b))
}
