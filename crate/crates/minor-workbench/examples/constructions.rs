//! Build the stock graphs and look at their shapes.
//!
//! The half-grid is a `(2m+1) x (h+1)` grid with columns labelled
//! `-m..=m` and rows `0..=h`. `G(m, h)` decorates it with a K5 glued to
//! every bottom-row vertex in a negative column and a K3,3 glued to every
//! bottom-row vertex in a non-negative column. `I` is the one-sum of K5
//! and K3,3 at a single shared vertex, and `H(L)` extends `I` with a
//! dangling path of `L` edges.
//!
//! Run with `cargo run --example constructions`.

use minor_workbench::construct::{build_g, build_h, build_i, half_grid, TruncationParams};
use minor_workbench::graph::{Graph, VertexTag};

fn describe(name: &str, g: &Graph) {
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.neighbors(v).len()).collect();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    println!(
        "{name}: {} vertices, {} edges, max degree {max_degree}",
        g.vertex_count(),
        g.edge_count(),
    );
}

fn main() {
    let params = TruncationParams::new(2, 1).expect("m >= 1 is a valid window");

    let grid = half_grid(&params);
    describe("half-grid(2,1)", &grid);

    let g = build_g(&params);
    describe("G(2,1)     ", &g);

    // Every vertex carries a tag saying where it came from: a grid
    // coordinate, or a private vertex of one of the attachments.
    let mut grid_count = 0;
    let mut k5_count = 0;
    let mut k33_count = 0;
    for v in 0..g.vertex_count() {
        match g.tag(v) {
            VertexTag::Grid { .. } => grid_count += 1,
            VertexTag::K5Private { .. } => k5_count += 1,
            VertexTag::K33Private { .. } => k33_count += 1,
            VertexTag::Plain => {}
        }
    }
    println!("  tags: {grid_count} grid, {k5_count} K5-private, {k33_count} K33-private");

    // The attachment anchors sit on the bottom row; list them by column.
    let anchors: Vec<(i32, &str)> = (0..g.vertex_count())
        .filter_map(|v| match g.tag(v) {
            VertexTag::Grid { col, row: 0 } => {
                let has_k5 = g
                    .neighbors(v)
                    .iter()
                    .any(|&w| matches!(g.tag(w), VertexTag::K5Private { .. }));
                let has_k33 = g
                    .neighbors(v)
                    .iter()
                    .any(|&w| matches!(g.tag(w), VertexTag::K33Private { .. }));
                match (has_k5, has_k33) {
                    (true, _) => Some((*col, "K5")),
                    (_, true) => Some((*col, "K3,3")),
                    _ => None,
                }
            }
            _ => None,
        })
        .collect();
    for (col, kind) in anchors {
        println!("  column {col:>2}: {kind} attached");
    }

    let i = build_i();
    describe("I = K5 *1 K3,3", &i);
    println!("  cut vertex of the one-sum: 0");

    let h = build_h(3).expect("ray of three edges");
    describe("H(3)       ", &h);
    println!(
        "  ray vertices: {:?}",
        (i.vertex_count()..h.vertex_count()).collect::<Vec<_>>()
    );
}
