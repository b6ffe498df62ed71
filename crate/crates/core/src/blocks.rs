//! Block–cut decomposition: maximal 2-connected components, bridges, and
//! cut vertices, via the classic low-link DFS with an edge stack.

use crate::graph::Graph;

/// One block: a maximal 2-connected subgraph or a bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertices of the block.
    pub vertices: Vec<usize>,
    /// Edges of the block as (min, max) pairs, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
}

struct State<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Block>,
    cut: Vec<bool>,
}

impl State<'_> {
    fn dfs(&mut self, v: usize, parent: usize) -> usize {
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        let mut children = 0usize;
        let mut skipped_parent = false;
        for i in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[i];
            if w == parent && !skipped_parent {
                skipped_parent = true;
                continue;
            }
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edge_stack.push((v, w));
                self.dfs(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent != usize::MAX {
                        self.cut[v] = true;
                    }
                    self.pop_block(v, w);
                }
            } else if self.disc[w] < self.disc[v] {
                self.edge_stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        children
    }

    fn pop_block(&mut self, v: usize, w: usize) {
        let mut edges = Vec::new();
        while let Some((a, b)) = self.edge_stack.pop() {
            edges.push((a.min(b), a.max(b)));
            if (a, b) == (v, w) {
                break;
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        self.blocks.push(Block { vertices, edges });
    }
}

/// Block–cut decomposition of `g`. Isolated vertices form no block; the
/// union of blocks covers every edge exactly once.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut st = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cut: vec![false; n],
    };
    for root in 0..n {
        if st.disc[root] == usize::MAX {
            let children = st.dfs(root, usize::MAX);
            if children > 1 {
                st.cut[root] = true;
            }
            debug_assert!(st.edge_stack.is_empty());
        }
    }
    BlockDecomposition {
        blocks: st.blocks,
        cut_vertices: (0..n).filter(|&v| st.cut[v]).collect(),
    }
}
