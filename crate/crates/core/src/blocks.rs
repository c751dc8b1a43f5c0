//! Biconnected components and the block-cut tree.

use std::collections::BTreeSet;

use crate::graph::{edge, Edge, Graph};

/// A maximal biconnected subgraph, a bridge, or an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Sorted canonical edges.
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks ordered by their smallest vertex, then by their smallest edge.
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<usize>,
    /// Edges `(block index, cut vertex)` of the block-cut tree.
    pub block_cut_tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.vertices.binary_search(&v).is_ok())
            .map(|(i, _)| i)
    }
}

/// Hopcroft-Tarjan block decomposition, iterative so deep paths do not
/// overflow the stack.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut raw_blocks: Vec<Vec<Edge>> = Vec::new();
    let mut cut = BTreeSet::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if adj[root].is_empty() {
            continue;
        }
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < adj[v].len() {
                frame.2 += 1;
                let w = adj[v][idx];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    cut.insert(parent);
                }
                let mut comp = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    comp.push(edge(e.0, e.1));
                    if e == (parent, v) {
                        break;
                    }
                }
                raw_blocks.push(comp);
            }
        }
        if root_children > 1 {
            cut.insert(root);
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let vertices: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            Block {
                vertices: vertices.into_iter().collect(),
                edges,
            }
        })
        .collect();
    for (v, nbrs) in adj.iter().enumerate() {
        if nbrs.is_empty() {
            blocks.push(Block {
                vertices: vec![v],
                edges: Vec::new(),
            });
        }
    }
    blocks.sort_by(|a, b| (a.vertices[0], a.edges.first()).cmp(&(b.vertices[0], b.edges.first())));

    let mut block_cut_tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if cut.contains(&v) {
                block_cut_tree.push((i, v));
            }
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices: cut,
        block_cut_tree,
    }
}

/// Whether `g` is connected, has at least three vertices and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && blocks(g).blocks.len() == 1
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_is_one_block() {
        let d = blocks(&g(3, &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn path_has_two_bridges() {
        let d = blocks(&g(3, &[(0, 1), (1, 2)]));
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks[0].vertices, vec![0, 1]);
        assert_eq!(d.blocks[1].vertices, vec![1, 2]);
        assert_eq!(d.cut_vertices, BTreeSet::from([1]));
        assert_eq!(d.block_cut_tree, vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn bowtie() {
        let d = blocks(&g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]));
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, BTreeSet::from([2]));
    }

    #[test]
    fn isolated_vertices_are_singleton_blocks() {
        let d = blocks(&g(4, &[(1, 2)]));
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.blocks[0].vertices, vec![0]);
        assert_eq!(d.blocks[2].vertices, vec![3]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn root_cut_vertex() {
        // star centred at the DFS root
        let d = blocks(&g(4, &[(0, 1), (0, 2), (0, 3)]));
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, BTreeSet::from([0]));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..10).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len();
            (
                Just(n),
                Just(pairs),
                proptest::collection::vec(any::<bool>(), m),
            )
                .prop_map(|(n, pairs, keep)| {
                    let e = pairs
                        .into_iter()
                        .zip(keep)
                        .filter(|(_, k)| *k)
                        .map(|(p, _)| p);
                    Graph::from_edges(n, e).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn edges_partitioned_and_blocks_share_at_most_cut_vertices(gr in arb_graph()) {
            let d = blocks(&gr);
            let mut all: Vec<Edge> = d.blocks.iter().flat_map(|b| b.edges.iter().copied()).collect();
            all.sort_unstable();
            let expected: Vec<Edge> = gr.edges().collect();
            prop_assert_eq!(all, expected);
            for (i, a) in d.blocks.iter().enumerate() {
                for b in &d.blocks[i + 1..] {
                    let shared: Vec<_> = a.vertices.iter().filter(|v| b.vertices.contains(v)).collect();
                    prop_assert!(shared.len() <= 1);
                    if let Some(v) = shared.first() {
                        prop_assert!(d.cut_vertices.contains(v));
                    }
                }
            }
            // block-cut forest: nodes = blocks + cut vertices, one tree per component
            let nodes = d.blocks.len() + d.cut_vertices.len();
            let comps = components(&gr).len();
            prop_assert_eq!(d.block_cut_tree.len() + comps, nodes);
        }

        #[test]
        fn block_sizes_invariant_under_relabeling(gr in arb_graph(), seed in any::<u64>()) {
            let n = gr.vertex_count();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let sizes = |g: &Graph| {
                let mut v: Vec<usize> = blocks(g).blocks.iter().map(|b| b.vertices.len()).collect();
                v.sort_unstable();
                v
            };
            prop_assert_eq!(sizes(&gr), sizes(&gr.relabel(&perm)));
        }
    }
}
