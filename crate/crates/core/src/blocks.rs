//! Blocks (maximal connected subgraphs without a cut vertex) and cut vertices.

use crate::graph::{Edge, Graph};

/// Block decomposition of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex set of each block, sorted; blocks sorted lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

/// Tarjan's low-link algorithm with an explicit edge stack. Isolated vertices
/// form singleton blocks.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            blocks.push(vec![root]);
            continue;
        }
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*idx) {
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
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
            let Some(&(p, _, _)) = stack.last() else { break };
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                if p != root {
                    is_cut[p] = true;
                }
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (p, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// Induced subgraph of every block, with maps back to `g`'s labels.
pub fn block_subgraphs(g: &Graph) -> Vec<(Graph, Vec<usize>)> {
    block_decomposition(g)
        .blocks
        .iter()
        .map(|block| {
            let mut removed = vec![true; g.n()];
            for &v in block {
                removed[v] = false;
            }
            g.induced_by_mask(&removed)
        })
        .collect()
}

pub fn has_cut_vertex(g: &Graph) -> bool {
    !block_decomposition(g).cut_vertices.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn bowtie_blocks() {
        let d = block_decomposition(&fixtures::bowtie());
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(d.cut_vertices, vec![0]);
    }

    #[test]
    fn path_and_cycle() {
        let d = block_decomposition(&Graph::path(4));
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
        let d = block_decomposition(&Graph::cycle(5));
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(d.cut_vertices.is_empty());
        assert_eq!(block_decomposition(&Graph::empty(1)).blocks, vec![vec![0]]);
    }

    proptest! {
        // v is a cut vertex iff deleting it increases the component count.
        #[test]
        fn cut_vertices_match_deletion(g in fixtures::arb_connected_graph(10)) {
            let d = block_decomposition(&g);
            for v in 0..g.n() {
                let (rest, _) = g.without_vertices(&[v]).unwrap();
                let splits = rest.n() > 0 && !rest.is_connected();
                prop_assert_eq!(d.cut_vertices.contains(&v), splits);
            }
            let total: usize = d.blocks.iter().map(|b| b.len() - 1).sum();
            // Block-cut tree of a connected graph: sum of (|B| - 1) = n - 1.
            prop_assert_eq!(total + 1, g.n());
        }
    }
}
