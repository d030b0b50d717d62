//! Vertex-disjoint paths and the matching cut, side by side.
//!
//! Menger's theorem says the maximum number of vertex-disjoint paths
//! between two vertex sets equals the minimum number of vertices whose
//! deletion separates them. Both sides are computed here — paths by
//! augmentation on a vertex-split flow network, the cut by reading the
//! residual graph — and the equality is checked on the spot.
//!
//! Run with `cargo run --example disjoint_paths`.

use minor_workbench::construct::{build_g, column_sides, half_grid, TruncationParams};
use minor_workbench::graph::VertexTag;
use minor_workbench::paths::{max_vertex_disjoint_paths, min_vertex_cut, validate_path_family};

fn main() {
    let params = TruncationParams::new(2, 2).expect("valid window");
    let grid = half_grid(&params);

    // Separate the leftmost column from the rightmost column.
    let west: Vec<usize> = (0..grid.vertex_count())
        .filter(|&v| matches!(grid.tag(v), VertexTag::Grid { col: -2, .. }))
        .collect();
    let east: Vec<usize> = (0..grid.vertex_count())
        .filter(|&v| matches!(grid.tag(v), VertexTag::Grid { col: 2, .. }))
        .collect();

    let family = max_vertex_disjoint_paths(&grid, &west, &east).expect("disjoint terminals");
    let cut = min_vertex_cut(&grid, &west, &east).expect("disjoint terminals");
    assert!(validate_path_family(&family, &grid, &west, &east).unwrap());
    assert_eq!(family.paths.len(), cut.vertices.len());

    println!("half-grid(2,2), west column to east column:");
    for path in &family.paths {
        println!("  path {path:?}");
    }
    println!("  min cut {:?} (size {})", cut.vertices, cut.vertices.len());
    println!("  Menger: {} = {}", family.paths.len(), cut.vertices.len());

    // In G(m, h) the natural separation runs between the K5 side (negative
    // columns) and the K3,3 side (the rest). The cut size h+1 is the
    // bottleneck that caps how many disjoint one-sum models can fit.
    for h in 0..=2 {
        let p = TruncationParams::new(2, h).expect("valid window");
        let g = build_g(&p);
        let (left, right) = column_sides(&g);
        let family = max_vertex_disjoint_paths(&g, &left, &right).expect("sides are disjoint");
        let cut = min_vertex_cut(&g, &left, &right).expect("sides are disjoint");
        assert_eq!(family.paths.len(), h + 1);
        assert_eq!(cut.vertices.len(), h + 1);
        println!(
            "G(2,{h}): {} disjoint left-right paths, cut {:?}",
            family.paths.len(),
            cut.vertices
        );
    }
}
