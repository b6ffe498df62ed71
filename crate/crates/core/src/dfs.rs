//! DFS trees and the decompositions built on them: depth levels,
//! root-to-leaf paths, fixed-height bands, and the leaf-heavy recursive
//! path decomposition.
//!
//! Neighbor exploration is always in ascending vertex id, so every
//! decomposition (and every coloring derived from one) is reproducible
//! bit for bit.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rooted DFS spanning tree of one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsTree {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    in_component: Vec<bool>,
    preorder: Vec<usize>,
    tree_edges: Vec<(usize, usize)>,
    back_edges: Vec<(usize, usize)>,
    children: Vec<Vec<usize>>,
}

impl DfsTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Depth of `v` in tree edges; `None` outside the root's component.
    pub fn depth(&self, v: usize) -> Option<usize> {
        self.in_component[v].then(|| self.depth[v])
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_component[v]
    }

    /// Visitation order.
    pub fn preorder(&self) -> &[usize] {
        &self.preorder
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    /// Non-tree edges of the component, oriented (descendant, ancestor).
    pub fn back_edges(&self) -> &[(usize, usize)] {
        &self.back_edges
    }

    /// Children of `v`, in discovery (ascending id) order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn max_depth(&self) -> usize {
        self.preorder.iter().map(|&v| self.depth[v]).max().unwrap_or(0)
    }

    /// True when `a` is an ancestor of `b` (or equal).
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut v = b;
        loop {
            if v == a {
                return true;
            }
            match self.parent[v] {
                Some(p) => v = p,
                None => return false,
            }
        }
    }

    /// The unique tree path between two comparable vertices, from the
    /// shallower to the deeper one.
    pub fn tree_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let (top, bottom) = if self.depth[a] <= self.depth[b] { (a, b) } else { (b, a) };
        let mut path = vec![bottom];
        let mut v = bottom;
        while v != top {
            v = self.parent[v]?;
            path.push(v);
        }
        path.reverse();
        Some(path)
    }
}

/// DFS tree of the component of `root`, exploring neighbors in ascending id.
pub fn dfs_tree(g: &Graph, root: usize) -> Result<DfsTree> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: g.n(),
        });
    }
    let n = g.n();
    let mut parent = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut in_component = vec![false; n];
    let mut preorder = Vec::new();
    let mut tree_edges = Vec::new();
    let mut back_edges = Vec::new();
    let mut children = vec![Vec::new(); n];

    // iterative DFS with explicit neighbor cursor
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    in_component[root] = true;
    preorder.push(root);
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx < g.neighbors(v).len() {
            let w = g.neighbors(v)[*idx];
            *idx += 1;
            if !in_component[w] {
                in_component[w] = true;
                parent[w] = Some(v);
                depth[w] = depth[v] + 1;
                children[v].push(w);
                preorder.push(w);
                tree_edges.push((v, w));
                stack.push((w, 0));
            } else if parent[v] != Some(w) && depth[w] < depth[v] {
                back_edges.push((v, w));
            }
        } else {
            stack.pop();
        }
    }

    Ok(DfsTree {
        root,
        parent,
        depth,
        in_component,
        preorder,
        tree_edges,
        back_edges,
        children,
    })
}

/// Depth levels V[i] of the tree, each sorted; no trailing empty levels.
pub fn levels(t: &DfsTree) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); t.max_depth() + 1];
    for &v in t.preorder() {
        out[t.depth[v]].push(v);
    }
    for level in &mut out {
        level.sort_unstable();
    }
    out
}

/// One root-to-leaf tree path per leaf, in order of increasing depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub paths: Vec<Vec<usize>>,
}

/// Paths from the root to each leaf, emitted in ascending leaf preorder.
pub fn root_to_leaf_paths(t: &DfsTree) -> PathDecomposition {
    let mut paths = Vec::new();
    for &v in t.preorder() {
        if t.children(v).is_empty() {
            let mut path = vec![v];
            let mut u = v;
            while let Some(p) = t.parent(u) {
                path.push(p);
                u = p;
            }
            path.reverse();
            paths.push(path);
        }
    }
    PathDecomposition { paths }
}

/// Partition of the tree into depth bands of fixed height, with palettes
/// rotating mod 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandDecomposition {
    pub band_height: usize,
    /// (band index, sorted vertex set of depths [j*h, (j+1)*h - 1]).
    pub bands: Vec<(usize, Vec<usize>)>,
}

impl BandDecomposition {
    pub fn palette_of_band(&self, band: usize) -> usize {
        band % 3
    }
}

pub fn bands(t: &DfsTree, h: usize) -> Result<BandDecomposition> {
    if h < 1 {
        return Err(Error::BadParameter("band height must be >= 1".into()));
    }
    let count = t.max_depth() / h + 1;
    let mut bands: Vec<(usize, Vec<usize>)> = (0..count).map(|j| (j, Vec::new())).collect();
    for &v in t.preorder() {
        bands[t.depth[v] / h].1.push(v);
    }
    for (_, vs) in &mut bands {
        vs.sort_unstable();
    }
    Ok(BandDecomposition {
        band_height: h,
        bands,
    })
}

/// One spine path of the leaf-heavy recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinePath {
    /// Vertices in increasing depth, starting at the subtree root.
    pub vertices: Vec<usize>,
    /// Recursion level, 1-based.
    pub level: usize,
    /// Depth (in the original tree) of the first vertex.
    pub top_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafHeavyDecomposition {
    pub paths: Vec<SpinePath>,
    pub levels: usize,
    pub leaf_count: usize,
}

/// Recursive decomposition: each spine descends into the child subtree
/// with the most leaves (ties by ascending id); off-spine subtrees recurse
/// one level deeper.
pub fn leaf_heavy_decomposition(t: &DfsTree) -> LeafHeavyDecomposition {
    // leaves below each vertex; preorder reversed gives children first
    let n = t.parent.len();
    let mut leaves = vec![0usize; n];
    for &v in t.preorder().iter().rev() {
        if t.children(v).is_empty() {
            leaves[v] = 1;
        } else {
            leaves[v] = t.children(v).iter().map(|&c| leaves[c]).sum();
        }
    }

    let mut paths = Vec::new();
    let mut queue = std::collections::VecDeque::from([(t.root(), 1usize)]);
    let mut max_level = 0;
    while let Some((top, level)) = queue.pop_front() {
        max_level = max_level.max(level);
        let mut spine = vec![top];
        let mut v = top;
        while let Some(&next) = t
            .children(v)
            .iter()
            .max_by_key(|&&c| (leaves[c], std::cmp::Reverse(c)))
        {
            for &c in t.children(v) {
                if c != next {
                    queue.push_back((c, level + 1));
                }
            }
            spine.push(next);
            v = next;
        }
        paths.push(SpinePath {
            top_depth: t.depth[top],
            vertices: spine,
            level,
        });
    }
    LeafHeavyDecomposition {
        paths,
        levels: max_level,
        leaf_count: leaves[t.root()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Graph;

    #[test]
    fn c4_tree_is_a_path_with_one_back_edge() {
        let g = generate::cycle(4).unwrap();
        let t = dfs_tree(&g, 0).unwrap();
        assert_eq!(t.preorder(), &[0, 1, 2, 3]);
        assert_eq!(t.depth(3), Some(3));
        assert_eq!(t.back_edges(), &[(3, 0)]);
        let lv = levels(&t);
        assert_eq!(lv, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn triangle_tree() {
        let g = generate::cycle(3).unwrap();
        let t = dfs_tree(&g, 0).unwrap();
        assert_eq!(t.tree_edges(), &[(0, 1), (1, 2)]);
        assert_eq!(t.back_edges(), &[(2, 0)]);
    }

    #[test]
    fn star_tree() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = dfs_tree(&g, 0).unwrap();
        assert!(t.back_edges().is_empty());
        let lv = levels(&t);
        assert_eq!(lv[0], vec![0]);
        assert_eq!(lv[1], vec![1, 2, 3]);
        let pd = root_to_leaf_paths(&t);
        assert_eq!(pd.paths, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
    }

    #[test]
    fn path_graph_single_leaf_path() {
        let g = generate::path(4).unwrap();
        let t = dfs_tree(&g, 0).unwrap();
        let pd = root_to_leaf_paths(&t);
        assert_eq!(pd.paths, vec![vec![0, 1, 2, 3]]);
    }

    fn perfect_binary_tree(depth: usize) -> Graph {
        // vertex 0 root; children of v are 2v+1, 2v+2
        let n = (1 << (depth + 1)) - 1;
        let inner = (1 << depth) - 1;
        Graph::new(n, (0..inner).flat_map(|v| [(v, 2 * v + 1), (v, 2 * v + 2)])).unwrap()
    }

    #[test]
    fn binary_tree_paths_share_prefixes() {
        let g = perfect_binary_tree(2);
        let t = dfs_tree(&g, 0).unwrap();
        let pd = root_to_leaf_paths(&t);
        assert_eq!(pd.paths.len(), 4);
        for p in &pd.paths {
            assert_eq!(p.len(), 3);
            assert_eq!(p[0], 0);
        }
        assert_eq!(pd.paths[0][1], pd.paths[1][1]);
    }

    #[test]
    fn band_arithmetic() {
        let g = generate::path(6).unwrap(); // depth 5
        let t = dfs_tree(&g, 0).unwrap();
        let b = bands(&t, 2).unwrap();
        assert_eq!(b.bands.len(), 3);
        assert_eq!(b.palette_of_band(2), 2);
        let g = generate::path(8).unwrap(); // depth 7
        let t = dfs_tree(&g, 0).unwrap();
        let b = bands(&t, 2).unwrap();
        assert_eq!(b.bands.len(), 4);
        assert_eq!(b.palette_of_band(3), 0);
        let h1 = bands(&t, 1).unwrap();
        assert_eq!(h1.bands.len(), 8);
        assert!(h1.bands.iter().all(|(_, vs)| vs.len() == 1));
    }

    #[test]
    fn leaf_heavy_on_bare_path() {
        let g = generate::path(5).unwrap();
        let t = dfs_tree(&g, 0).unwrap();
        let d = leaf_heavy_decomposition(&t);
        assert_eq!(d.levels, 1);
        assert_eq!(d.paths.len(), 1);
        assert_eq!(d.paths[0].vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn leaf_heavy_on_perfect_binary_tree() {
        // depth 3 tree: 8 leaves, levels should be log2(8) + 1 = 4
        let g = perfect_binary_tree(3);
        let t = dfs_tree(&g, 0).unwrap();
        let d = leaf_heavy_decomposition(&t);
        assert_eq!(d.leaf_count, 8);
        assert_eq!(d.levels, 4);
        // every off-spine subtree has at most half the parent's leaves
        assert!(d.levels <= (d.leaf_count as f64).log2().floor() as usize + 1);
    }

    #[test]
    fn leaf_heavy_on_caterpillar() {
        // path 0-1-2-3 with pendants 4,5 on 1 and 2
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        let t = dfs_tree(&g, 0).unwrap();
        let d = leaf_heavy_decomposition(&t);
        assert_eq!(d.levels, 2);
        assert_eq!(d.paths[0].vertices, vec![0, 1, 2, 3]);
        let pendants: Vec<_> = d.paths[1..].iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(pendants, vec![vec![4], vec![5]]);
    }

    #[test]
    fn back_edges_join_ancestor_descendant_pairs() {
        for seed in 0..20 {
            let g = generate::random_graph(10, 0.3, seed).unwrap();
            let t = dfs_tree(&g, 0).unwrap();
            for &(v, w) in t.back_edges() {
                assert!(t.is_ancestor(w, v), "cross edge {v}-{w} found");
            }
            // every level is independent
            for lv in levels(&t) {
                for i in 0..lv.len() {
                    for j in i + 1..lv.len() {
                        assert!(!g.has_edge(lv[i], lv[j]));
                    }
                }
            }
        }
    }
}
