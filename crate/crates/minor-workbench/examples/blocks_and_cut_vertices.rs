//! Decompose a host into blocks and render the block-cut tree.
//!
//! A block is a maximal subgraph with no cut vertex of its own. In
//! `G(m, h)` the decomposition is always the same picture: one big grid
//! block plus one small block per attached K5 or K3,3, joined to the grid
//! at its anchor. This confinement is what makes searching for dense
//! minors cheap — each search only needs to look inside one block.
//!
//! Run with `cargo run --example blocks_and_cut_vertices`.

use minor_workbench::blocks::{block_cut_tree_dot, block_decomposition, is_biconnected};
use minor_workbench::construct::{build_g, TruncationParams};
use minor_workbench::graph::Graph;

fn main() {
    let params = TruncationParams::new(2, 1).expect("valid window");
    let g = build_g(&params);
    let d = block_decomposition(&g);

    println!(
        "G(2,1): {} blocks, {} cut vertices",
        d.blocks.len(),
        d.cut_vertices.len()
    );
    for (i, block) in d.blocks.iter().enumerate() {
        let kind = if block.len() == params.grid_vertex_count() {
            "grid"
        } else if block.len() == 5 {
            "K5 attachment"
        } else {
            "K3,3 attachment"
        };
        println!("  block {i}: {} vertices ({kind})", block.len());
    }
    println!("  cut vertices: {:?}", d.cut_vertices);

    // The block-cut tree is a tree: blocks and cut vertices alternate.
    println!(
        "  tree: {} nodes, {} edges",
        d.blocks.len() + d.cut_vertices.len(),
        d.tree_edges.len()
    );

    // Same census in a formula: 1 grid block + m K5 blocks + (m+1) K3,3
    // blocks, one cut vertex per attachment anchor.
    for m in 1..=3 {
        let p = TruncationParams::new(m, 1).expect("valid window");
        let d = block_decomposition(&build_g(&p));
        assert_eq!(d.blocks.len(), 1 + m + (m + 1));
        assert_eq!(d.cut_vertices.len(), 2 * m + 1);
        println!("G({m},1): {} blocks = 1 + {m} + {}", d.blocks.len(), m + 1);
    }

    // Graphs without cut vertices are a single block.
    let k4 = Graph::complete(4);
    assert!(is_biconnected(&k4));
    println!("K4 is biconnected: single block, no cut vertices");

    println!("\nblock-cut tree of G(1,1) in DOT:\n");
    let small = block_decomposition(&build_g(&TruncationParams::new(1, 1).unwrap()));
    print!("{}", block_cut_tree_dot(&small));
}
