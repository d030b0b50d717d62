//! Generators for the workbench's standard graphs: finite half-grid
//! truncations, K5/K3,3 attachments at row-0 vertices, the doubly-attached
//! host graph, and the two pattern graphs used throughout (`I`, the 1-sum of
//! K5 and K3,3, and `H`, its disjoint union with a ray surrogate).
//!
//! All generators tag vertices ([`VertexTag`]) so later stages can reason
//! about columns, rows and attachment blocks without re-deriving geometry.
//!
//! # Example
//!
//! ```
//! use minor_workbench::construct::{build_g, TruncationParams};
//!
//! let p = TruncationParams::new(1, 1).unwrap();
//! let g = build_g(&p);
//! assert_eq!(g.vertex_count(), 20);
//! assert_eq!(g.edge_count(), 35);
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexTag};

/// Window of the infinite half-grid kept by a truncation: columns `-m..=m`,
/// rows `0..=h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationParams {
    pub m: usize,
    pub h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("truncation needs m >= 1 (columns -m..=m must straddle column 0)")]
    WindowTooNarrow,
    #[error("ray surrogate needs at least 1 edge")]
    RayTooShort,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl TruncationParams {
    pub fn new(m: usize, h: usize) -> Result<TruncationParams, ConstructError> {
        if m < 1 {
            return Err(ConstructError::WindowTooNarrow);
        }
        Ok(TruncationParams { m, h })
    }

    /// Number of grid vertices, `(2m+1)(h+1)`.
    pub fn grid_vertex_count(&self) -> usize {
        (2 * self.m + 1) * (self.h + 1)
    }
}

/// Finite half-grid on columns `-m..=m` and rows `0..=h`, with edges between
/// orthogonal neighbors. Vertex ids are column-major:
/// `id(col, row) = (col + m)(h + 1) + row`.
pub fn half_grid(p: &TruncationParams) -> Graph {
    let (m, h) = (p.m as i32, p.h as u32);
    let rows = p.h + 1;
    let id = |col: i32, row: u32| (col + m) as usize * rows + row as usize;
    let mut edges = Vec::new();
    let mut tags = Vec::with_capacity(p.grid_vertex_count());
    for col in -m..=m {
        for row in 0..=h {
            tags.push(VertexTag::Grid { col, row });
            if col < m {
                edges.push((id(col, row), id(col + 1, row)));
            }
            if row < h {
                edges.push((id(col, row), id(col, row + 1)));
            }
        }
    }
    Graph::build(p.grid_vertex_count(), &edges)
        .expect("half-grid edges are valid")
        .with_tags(tags)
        .expect("one tag per vertex")
}

/// Column a vertex belongs to for attachment-tagging purposes: its grid
/// column if it has one, otherwise 0.
fn anchor_col(g: &Graph, v: usize) -> i32 {
    g.tag(v).grid_col().unwrap_or(0)
}

/// Attaches a K5 at `anchor`: four new pairwise-adjacent vertices, each also
/// adjacent to `anchor`, so `{anchor} ∪ new` induces K5. New ids are
/// appended after the existing ones.
pub fn attach_k5(g: &Graph, anchor: usize) -> Result<Graph, ConstructError> {
    let n = g.vertex_count();
    if anchor >= n {
        return Err(GraphError::VertexOutOfRange { vertex: anchor, vertex_count: n }.into());
    }
    let col = anchor_col(g, anchor);
    let mut edges = g.edges();
    for i in 0..4 {
        edges.push((anchor, n + i));
        for j in i + 1..4 {
            edges.push((n + i, n + j));
        }
    }
    let mut tags = g.tags().to_vec();
    for index in 0..4u8 {
        tags.push(VertexTag::K5Private { anchor_col: col, index });
    }
    Ok(Graph::build(n + 4, &edges)?.with_tags(tags)?)
}

/// Attaches a K3,3 at `anchor`: five new vertices so that `{anchor} ∪ new`
/// induces K3,3 with `anchor` in the first bipartition class. The new
/// vertices with tag indices 0..=1 join `anchor`'s class; indices 2..=4 form
/// the opposite class (and are the ones adjacent to `anchor`).
pub fn attach_k33(g: &Graph, anchor: usize) -> Result<Graph, ConstructError> {
    let n = g.vertex_count();
    if anchor >= n {
        return Err(GraphError::VertexOutOfRange { vertex: anchor, vertex_count: n }.into());
    }
    let col = anchor_col(g, anchor);
    let mut edges = g.edges();
    // First class: anchor, n+0, n+1. Second class: n+2, n+3, n+4.
    for second in 2..5 {
        edges.push((anchor, n + second));
        edges.push((n, n + second));
        edges.push((n + 1, n + second));
    }
    let mut tags = g.tags().to_vec();
    for index in 0..5u8 {
        tags.push(VertexTag::K33Private { anchor_col: col, index });
    }
    Ok(Graph::build(n + 5, &edges)?.with_tags(tags)?)
}

/// The doubly-attached truncation: `half_grid(p)` with a K5 attached at
/// every `(a, 0)`, `-m <= a <= -1`, and a K3,3 attached at every `(b, 0)`,
/// `0 <= b <= m`. Attachments are appended in ascending column order, K5s
/// first, so ids are deterministic.
pub fn build_g(p: &TruncationParams) -> Graph {
    let mut g = half_grid(p);
    let m = p.m as i32;
    for a in -m..0 {
        let anchor = g.grid_vertex(a, 0).expect("row-0 vertex exists");
        g = attach_k5(&g, anchor).expect("anchor id in range");
    }
    for b in 0..=m {
        let anchor = g.grid_vertex(b, 0).expect("row-0 vertex exists");
        g = attach_k33(&g, anchor).expect("anchor id in range");
    }
    g
}

/// Ids of the distinguished vertices of [`build_i`]: the cut vertex, the
/// four K5-side privates, the two vertices completing the cut vertex's
/// bipartition class, and the three vertices of the opposite class.
pub const I_CUT: usize = 0;
pub const I_K5_SIDE: [usize; 4] = [1, 2, 3, 4];
pub const I_K33_SAME_CLASS: [usize; 2] = [5, 6];
pub const I_K33_OTHER_CLASS: [usize; 3] = [7, 8, 9];

/// The 1-sum of K5 and K3,3: 10 vertices, 19 edges, one cut vertex.
///
/// Canonical ids: vertex 0 is the shared cut vertex; `{0,1,2,3,4}` induces
/// the K5; `{0,5,6}` is the first bipartition class and `{7,8,9}` the second
/// class of the K3,3.
pub fn build_i() -> Graph {
    Graph::complete(5)
        .one_sum(0, &Graph::complete_bipartite(3, 3), 0)
        .expect("vertex 0 exists in both parts")
}

/// The pattern `I ⊔ (path with ray_edges edges)`: a disconnected pattern
/// whose second component is the finite ray surrogate. Path ids are
/// `10..=10+ray_edges` in path order.
pub fn build_h(ray_edges: usize) -> Result<Graph, ConstructError> {
    if ray_edges < 1 {
        return Err(ConstructError::RayTooShort);
    }
    Ok(build_i().disjoint_union(&Graph::path(ray_edges + 1)))
}

/// Splits a column-tagged host into its negative-column vertices (the K5
/// attachment side) and its nonnegative-column vertices. Vertices without a
/// column (plain tags) land on neither side.
pub fn column_sides(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for v in 0..g.vertex_count() {
        match g.tag(v).column() {
            Some(col) if col < 0 => left.push(v),
            Some(_) => right.push(v),
            None => {}
        }
    }
    (left, right)
}
