//! Composition schemes: DFS decomposition + deterministic online session
//! = full-graph coloring, with the claimed bound carried alongside.

use crate::blocks;
use crate::dfs::{self, DfsTree};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::online::AlgorithmSpec;
use crate::oracle;

/// A coloring produced by a composition, with the bound it claims and a
/// per-vertex trace of which path / band / recursion level colored it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposedColoring {
    pub coloring: Coloring,
    /// Claimed color bound for this instance, when the algorithm has one.
    pub bound: Option<usize>,
    pub bound_desc: String,
    pub trace: Vec<usize>,
}

impl ComposedColoring {
    pub fn colors_used(&self) -> usize {
        self.coloring.colors_used()
    }
}

const UNSET: usize = usize::MAX;

/// Feed one root-to-leaf path to a fresh session; earlier neighbors are
/// looked up in `g`. Colors land in `colors`, which doubles as the
/// shared-prefix consistency check.
fn color_path_with_session(
    g: &Graph,
    spec: &AlgorithmSpec,
    path: &[usize],
    colors: &mut [usize],
    trace: &mut [usize],
    tag: usize,
) -> Result<usize> {
    let mut session = spec.session()?;
    let mut max_color = 0;
    for (j, &v) in path.iter().enumerate() {
        let nbrs: Vec<usize> = (0..j).filter(|&i| g.has_edge(path[i], v)).collect();
        let c = session.next(&nbrs)?;
        max_color = max_color.max(c);
        if colors[v] == UNSET {
            colors[v] = c;
            trace[v] = tag;
        } else if colors[v] != c {
            return Err(Error::ContractViolation(format!(
                "shared prefix recolored: vertex {v} got {c} after {}",
                colors[v]
            )));
        }
    }
    Ok(max_color + 1)
}

/// Path composition: DFS root-to-leaf paths, each presented to a fresh
/// deterministic session; shared prefixes replay identically.
pub fn compose_paths(g: &Graph, spec: &AlgorithmSpec) -> Result<ComposedColoring> {
    spec.session()?; // validate parameters up front
    let mut colors = vec![UNSET; g.n()];
    let mut trace = vec![0usize; g.n()];
    let mut tag = 0usize;
    let mut max_depth = 0usize;
    for comp in g.components() {
        let t = dfs::dfs_tree(g, comp[0])?;
        max_depth = max_depth.max(t.max_depth());
        for path in dfs::root_to_leaf_paths(&t).paths {
            color_path_with_session(g, spec, &path, &mut colors, &mut trace, tag)?;
            tag += 1;
        }
    }
    let bound = spec.palette_bound(max_depth + 1);
    Ok(ComposedColoring {
        coloring: Coloring::new(colors),
        bound: Some(bound),
        bound_desc: format!("palette bound at h+1 = {} vertices", max_depth + 1),
        trace,
    })
}

/// Band composition: per block, DFS bands of height `ell + 1` with three
/// rotating palettes; each band's subtree pieces are path-colored by fresh
/// sessions. Blocks are visited in block–cut BFS order and reconciled at
/// cut vertices by a color transposition.
pub fn compose_bands(g: &Graph, ell: usize, spec: &AlgorithmSpec) -> Result<ComposedColoring> {
    if ell < 3 || ell % 2 == 0 {
        return Err(Error::BadParameter(format!(
            "odd circumference must be odd and >= 3, got {ell}"
        )));
    }
    if g.is_bipartite() {
        return Err(Error::NoOddCycle);
    }
    spec.session()?;
    let per_palette = spec.palette_bound(ell + 1);
    let decomp = blocks::blocks(g);
    let mut block_of_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (bi, b) in decomp.blocks.iter().enumerate() {
        for &v in &b.vertices {
            block_of_vertex[v].push(bi);
        }
    }

    let mut colors = vec![UNSET; g.n()];
    let mut trace = vec![0usize; g.n()];
    let mut visited = vec![false; decomp.blocks.len()];

    for comp in g.components() {
        if comp.len() == 1 {
            colors[comp[0]] = 0;
            continue;
        }
        // BFS over the block-cut structure from the component's smallest vertex
        let start_block = block_of_vertex[comp[0]][0];
        let mut queue = std::collections::VecDeque::from([(start_block, comp[0])]);
        visited[start_block] = true;
        while let Some((bi, entry)) = queue.pop_front() {
            color_block(
                g,
                &decomp.blocks[bi],
                entry,
                ell,
                spec,
                per_palette,
                &mut colors,
                &mut trace,
                bi,
            )?;
            for &v in &decomp.blocks[bi].vertices {
                for &nb in &block_of_vertex[v] {
                    if !visited[nb] {
                        visited[nb] = true;
                        queue.push_back((nb, v));
                    }
                }
            }
        }
    }

    Ok(ComposedColoring {
        coloring: Coloring::new(colors),
        bound: Some(3 * per_palette),
        bound_desc: format!("3 palettes of {per_palette} (bound at ell+1 = {} vertices)", ell + 1),
        trace,
    })
}

#[allow(clippy::too_many_arguments)]
fn color_block(
    g: &Graph,
    block: &blocks::Block,
    entry: usize,
    ell: usize,
    spec: &AlgorithmSpec,
    per_palette: usize,
    colors: &mut [usize],
    trace: &mut [usize],
    block_tag: usize,
) -> Result<()> {
    let (h, old_id) = g.induced(&block.vertices);
    let root_local = old_id.binary_search(&entry).expect("entry is in the block");
    let t = dfs::dfs_tree(&h, root_local)?;
    let band_height = ell + 1;
    let band_decomp = dfs::bands(&t, band_height)?;

    let mut local = vec![UNSET; h.n()];
    let mut local_trace = vec![0usize; h.n()];
    for (band_idx, band_vertices) in &band_decomp.bands {
        let palette = band_decomp.palette_of_band(*band_idx);
        let lo = band_idx * band_height;
        let hi = lo + band_height - 1;
        // piece roots: band vertices whose parent lies above the band
        for &v in band_vertices {
            let is_root = match t.parent(v) {
                None => true,
                Some(p) => t.depth(p).unwrap() < lo,
            };
            if !is_root {
                continue;
            }
            for path in piece_paths(&t, v, hi) {
                let used = color_path_with_session(&h, spec, &path, &mut local, &mut local_trace, 0)?;
                if used > per_palette {
                    return Err(Error::ContractViolation(format!(
                        "session used {used} colors, above its {per_palette}-color palette"
                    )));
                }
            }
        }
        for &v in band_vertices {
            local[v] += palette * per_palette;
        }
    }

    // reconcile with the entry vertex's existing color by a transposition
    let scheme_entry = local[root_local];
    if colors[entry] != UNSET && colors[entry] != scheme_entry {
        let target = colors[entry];
        for c in &mut local {
            if *c == scheme_entry {
                *c = target;
            } else if *c == target {
                *c = scheme_entry;
            }
        }
    }
    for (v_local, &v_old) in old_id.iter().enumerate() {
        if colors[v_old] == UNSET {
            colors[v_old] = local[v_local];
            trace[v_old] = block_tag;
        }
    }
    Ok(())
}

/// Root-to-leaf paths of the subtree of `top` truncated at depth `max_depth`.
fn piece_paths(t: &DfsTree, top: usize, max_depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(top, vec![top])];
    while let Some((v, path)) = stack.pop() {
        let deeper: Vec<usize> = t
            .children(v)
            .iter()
            .copied()
            .filter(|&c| t.depth(c).unwrap() <= max_depth)
            .collect();
        if deeper.is_empty() {
            out.push(path);
        } else {
            // reverse so ascending-id children come off the stack first
            for &c in deeper.iter().rev() {
                let mut next = path.clone();
                next.push(c);
                stack.push((c, next));
            }
        }
    }
    out
}

/// Colors one ordered path (with its back edges in `g`) at a time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathColorer {
    /// Exact brute force on the path-induced subgraph.
    Exact { limit: usize },
    /// First Fit over the path order.
    FirstFit,
}

impl PathColorer {
    /// Colors for `path`'s vertices, in path order.
    fn color(&self, g: &Graph, path: &[usize]) -> Result<Vec<usize>> {
        match *self {
            PathColorer::Exact { limit } => {
                let (h, old_id) = g.induced(path);
                let (_, c) = oracle::chromatic_number_exact(&h, limit)?;
                Ok(path
                    .iter()
                    .map(|&v| c.color(old_id.binary_search(&v).unwrap()))
                    .collect())
            }
            PathColorer::FirstFit => {
                let mut session = AlgorithmSpec::FirstFit.session()?;
                let mut out = Vec::with_capacity(path.len());
                for (j, &v) in path.iter().enumerate() {
                    let nbrs: Vec<usize> = (0..j).filter(|&i| g.has_edge(path[i], v)).collect();
                    out.push(session.next(&nbrs)?);
                }
                Ok(out)
            }
        }
    }
}

/// Recursive composition: leaf-heavy spine decomposition, one palette per
/// recursion level, spines colored by `colorer`.
pub fn compose_recursive(
    g: &Graph,
    colorer: &PathColorer,
    declared: Option<usize>,
) -> Result<ComposedColoring> {
    let mut colors = vec![UNSET; g.n()];
    let mut trace = vec![0usize; g.n()];
    let mut max_path_colors = 0usize;
    let mut max_levels = 0usize;

    for comp in g.components() {
        let t = dfs::dfs_tree(g, comp[0])?;
        let d = dfs::leaf_heavy_decomposition(&t);
        max_levels = max_levels.max(d.levels);
        // color every spine, then pack palettes level by level
        let mut per_level_max = vec![0usize; d.levels];
        let mut spine_colors: Vec<Vec<usize>> = Vec::with_capacity(d.paths.len());
        for p in &d.paths {
            let c = colorer.color(g, &p.vertices)?;
            let used = c.iter().max().map_or(0, |m| m + 1);
            if let Some(k) = declared {
                if used > k {
                    return Err(Error::ContractViolation(format!(
                        "path colorer declared {k} colors but used {used}"
                    )));
                }
            }
            max_path_colors = max_path_colors.max(used);
            per_level_max[p.level - 1] = per_level_max[p.level - 1].max(used);
            spine_colors.push(c);
        }
        let mut offsets = vec![0usize; d.levels];
        for lv in 1..d.levels {
            offsets[lv] = offsets[lv - 1] + per_level_max[lv - 1];
        }
        for (p, c) in d.paths.iter().zip(&spine_colors) {
            for (&v, &cv) in p.vertices.iter().zip(c) {
                colors[v] = offsets[p.level - 1] + cv;
                trace[v] = p.level;
            }
        }
    }

    let k = declared.unwrap_or(max_path_colors);
    Ok(ComposedColoring {
        coloring: Coloring::new(colors),
        bound: Some(k * max_levels.max(1)),
        bound_desc: format!("k = {k} path colors times {max_levels} recursion levels"),
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::is_proper;

    #[test]
    fn first_fit_on_tree_uses_two() {
        let g = generate::path(7).unwrap();
        let out = compose_paths(&g, &AlgorithmSpec::FirstFit).unwrap();
        assert!(is_proper(&g, &out.coloring));
        assert_eq!(out.colors_used(), 2);
    }

    #[test]
    fn modulo_level_on_k4() {
        let g = generate::complete(4).unwrap();
        let out = compose_paths(&g, &AlgorithmSpec::ModuloLevel { ell: 3 }).unwrap();
        assert!(is_proper(&g, &out.coloring));
        assert_eq!(out.colors_used(), 4);
        assert_eq!(out.bound, Some(4));
    }

    #[test]
    fn prefix_consistency_on_random_graphs() {
        for seed in 0..20 {
            let g = generate::random_graph(11, 0.3, seed).unwrap();
            let out = compose_paths(&g, &AlgorithmSpec::FirstFit).unwrap();
            assert!(is_proper(&g, &out.coloring), "seed {seed}");
        }
    }

    #[test]
    fn bands_rejects_bipartite() {
        let g = generate::cycle(6).unwrap();
        assert_eq!(
            compose_bands(&g, 3, &AlgorithmSpec::FirstFit).unwrap_err(),
            Error::NoOddCycle
        );
    }

    #[test]
    fn bands_on_shallow_graph_reduces_to_paths() {
        let g = generate::cycle(3).unwrap();
        let out = compose_bands(&g, 3, &AlgorithmSpec::FirstFit).unwrap();
        assert!(is_proper(&g, &out.coloring));
        assert!(out.colors_used() <= out.bound.unwrap());
    }

    #[test]
    fn bands_across_cut_vertices() {
        // two triangles sharing vertex 2
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let out = compose_bands(&g, 3, &AlgorithmSpec::FirstFit).unwrap();
        assert!(is_proper(&g, &out.coloring));
        assert!(out.colors_used() <= out.bound.unwrap());
    }

    #[test]
    fn bands_proper_on_random_nonbipartite() {
        for seed in 0..30 {
            let g = generate::random_graph(12, 0.3, seed).unwrap();
            if g.is_bipartite() {
                continue;
            }
            let stats = oracle::cycle_stats(&g, 20).unwrap();
            let ell = stats.odd_circumference.unwrap();
            for spec in [AlgorithmSpec::FirstFit, AlgorithmSpec::ModuloLevel { ell }] {
                let out = compose_bands(&g, ell, &spec).unwrap();
                assert!(is_proper(&g, &out.coloring), "seed {seed} spec {spec:?}");
                assert!(out.colors_used() <= out.bound.unwrap(), "seed {seed}");
            }
        }
    }

    #[test]
    fn recursive_on_bare_path() {
        let g = generate::path(9).unwrap();
        let out = compose_recursive(&g, &PathColorer::Exact { limit: 20 }, None).unwrap();
        assert!(is_proper(&g, &out.coloring));
        assert!(out.colors_used() <= 2);
    }

    #[test]
    fn recursive_on_groetzsch() {
        let g = generate::groetzsch();
        let out = compose_recursive(&g, &PathColorer::Exact { limit: 20 }, None).unwrap();
        assert!(is_proper(&g, &out.coloring));
        assert!(out.colors_used() <= out.bound.unwrap());
    }

    #[test]
    fn recursive_contract_violation_detected() {
        let g = generate::complete(5).unwrap();
        let err = compose_recursive(&g, &PathColorer::Exact { limit: 20 }, Some(2)).unwrap_err();
        assert!(matches!(err, Error::ContractViolation(_)));
    }

    use crate::graph::Graph;
    use crate::oracle;
}
