//! Biconnected components (blocks), cut vertices and the block-cut tree.
//!
//! Blocks are maximal subgraphs without a cut vertex; a bridge forms a
//! two-vertex block and isolated vertices form no block, so the edges of the
//! graph are partitioned exactly by the blocks. The block-cut incidence
//! structure (blocks vs. the cut vertices they contain) is a forest.
//!
//! # Example
//!
//! ```
//! use minor_workbench::blocks::block_decomposition;
//! use minor_workbench::graph::Graph;
//!
//! let d = block_decomposition(&Graph::path(4));
//! assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
//! assert_eq!(d.cut_vertices, vec![1, 2]);
//! ```

use crate::graph::Graph;

/// Output of [`block_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex set of each block, blocks ordered by smallest vertex
    /// (ties broken lexicographically).
    pub blocks: Vec<Vec<usize>>,
    /// Sorted ids of all cut vertices.
    pub cut_vertices: Vec<usize>,
    /// Incidences `(block index, cut vertex)` of the block-cut forest,
    /// sorted.
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Index of the block containing both endpoints of the given edge, if
    /// the edge exists. Every edge lies in exactly one block.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
    }
}

/// Computes blocks and cut vertices with the lowpoint DFS (iterative, so
/// deep grids cannot overflow the call stack).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![0usize; n]; // 0 = unvisited, else discovery time
    let mut low = vec![0usize; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut time = 0usize;

    for root in 0..n {
        if disc[root] != 0 {
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        let mut root_children = 0usize;
        // (vertex, index into its neighbor list)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let u = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[u] == 0 {
                    parent[u] = Some(v);
                    time += 1;
                    disc[u] = time;
                    low[u] = time;
                    edge_stack.push((v, u));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, 0));
                } else if parent[v] != Some(u) && disc[u] < disc[v] {
                    // Back edge, recorded once (from the deeper endpoint).
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // p closes a block rooted at the tree edge (p, v).
                        let mut members = Vec::new();
                        loop {
                            let (a, b) = edge_stack.pop().expect("tree edge still stacked");
                            members.push(a);
                            members.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        members.sort_unstable();
                        members.dedup();
                        blocks.push(members);
                        if p != root {
                            is_cut[p] = true;
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    blocks.sort();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut tree_edges = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            if is_cut[v] {
                tree_edges.push((i, v));
            }
        }
    }
    BlockDecomposition { blocks, cut_vertices, tree_edges }
}

/// A graph is biconnected when it is connected, has no cut vertex, and is
/// either a single edge or has at least 3 vertices.
pub fn is_biconnected(g: &Graph) -> bool {
    g.vertex_count() >= 2
        && g.is_connected()
        && block_decomposition(g).blocks.len() == 1
}

/// DOT rendering of the block-cut forest: box nodes for blocks, round nodes
/// for cut vertices.
pub fn block_cut_tree_dot(d: &BlockDecomposition) -> String {
    use std::fmt::Write;
    let mut out = String::from("graph block_cut_tree {\n");
    for (i, block) in d.blocks.iter().enumerate() {
        let members: Vec<String> = block.iter().map(|v| v.to_string()).collect();
        writeln!(out, "  b{i} [shape=box, label=\"B{i} {{{}}}\"];", members.join(",")).unwrap();
    }
    for &v in &d.cut_vertices {
        writeln!(out, "  c{v} [label=\"cut {v}\"];").unwrap();
    }
    for &(i, v) in &d.tree_edges {
        writeln!(out, "  b{i} -- c{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{attach_k5, build_g, build_i, half_grid, TruncationParams};

    #[test]
    fn path_splits_into_edge_blocks() {
        let d = block_decomposition(&Graph::path(4));
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
        assert_eq!(d.tree_edges, vec![(0, 1), (1, 1), (1, 2), (2, 2)]);
    }

    #[test]
    fn one_sum_pattern_has_two_blocks() {
        let d = block_decomposition(&build_i());
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3, 4], vec![0, 5, 6, 7, 8, 9]]);
        assert_eq!(d.cut_vertices, vec![0]);
    }

    #[test]
    fn attached_truncation_block_census() {
        let g = build_g(&TruncationParams::new(1, 1).unwrap());
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 4); // grid + K5 + two K3,3
        // Cut vertices are exactly the row-0 anchors (-1,0), (0,0), (1,0).
        assert_eq!(d.cut_vertices, vec![0, 2, 4]);
        for m in [1usize, 2] {
            let g = build_g(&TruncationParams::new(m, 1).unwrap());
            assert_eq!(block_decomposition(&g).blocks.len(), 1 + m + (m + 1));
        }
    }

    #[test]
    fn edges_partition_into_blocks() {
        for g in [
            build_g(&TruncationParams::new(2, 1).unwrap()),
            Graph::path(5).disjoint_union(&Graph::cycle(4)),
            Graph::build(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ] {
            let d = block_decomposition(&g);
            let total: usize = d
                .blocks
                .iter()
                .map(|b| g.induced_subgraph(b).unwrap().graph.edge_count())
                .sum();
            assert_eq!(total, g.edge_count());
            // Pairwise intersections are single cut vertices.
            for i in 0..d.blocks.len() {
                for j in i + 1..d.blocks.len() {
                    let shared: Vec<usize> = d.blocks[i]
                        .iter()
                        .filter(|v| d.blocks[j].binary_search(v).is_ok())
                        .copied()
                        .collect();
                    assert!(shared.len() <= 1);
                    for v in shared {
                        assert!(d.cut_vertices.binary_search(&v).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn double_attachment_makes_two_new_blocks() {
        let base = Graph::cycle(3);
        let g = attach_k5(&attach_k5(&base, 1).unwrap(), 1).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, vec![1]);
    }

    #[test]
    fn biconnectivity_cases() {
        assert!(is_biconnected(&Graph::complete(5)));
        assert!(is_biconnected(&Graph::path(2))); // single edge
        assert!(is_biconnected(&half_grid(&TruncationParams::new(2, 2).unwrap())));
        assert!(!is_biconnected(&build_i()));
        assert!(!is_biconnected(&Graph::path(3)));
        assert!(!is_biconnected(&Graph::new(1)));
        assert!(!is_biconnected(&Graph::new(0)));
        assert!(!is_biconnected(&Graph::complete(3).disjoint_union(&Graph::complete(3))));
    }

    #[test]
    fn isolated_vertices_form_no_block() {
        let g = Graph::build(4, &[(1, 2)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks, vec![vec![1, 2]]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn block_cut_tree_dot_shape() {
        let d = block_decomposition(&Graph::path(3));
        let dot = block_cut_tree_dot(&d);
        assert!(dot.contains("b0 [shape=box, label=\"B0 {0,1}\"]"));
        assert!(dot.contains("c1 [label=\"cut 1\"]"));
        assert!(dot.contains("b0 -- c1;"));
    }
}
