//! Immutable simple graphs on dense vertex ids `0..n`, with optional
//! construction tags on vertices.
//!
//! Every operation that removes or merges vertices returns a fresh graph
//! re-indexed to dense ids together with the old→new id mapping, so callers
//! can translate vertex sets (branch sets, separators, paths) between the
//! original and derived graphs.
//!
//! # Example
//!
//! ```
//! use minor_workbench::graph::Graph;
//!
//! let k5 = Graph::complete(5);
//! let reduced = k5.contract_edge(0, 1).unwrap();
//! assert_eq!(reduced.graph.vertex_count(), 4);
//! assert_eq!(reduced.graph.edge_count(), 6); // K4
//! assert_eq!(reduced.old_to_new[0], reduced.old_to_new[1]);
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Provenance tag attached to a vertex by the construction helpers.
///
/// Tags are carried along by every graph operation (re-indexing keeps the
/// surviving vertices' tags; a contraction keeps the tag of the smaller
/// endpoint) and are what the verification harnesses use to talk about
/// "column", "row" and "attached clique" without re-deriving coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexTag {
    /// No provenance; the default for hand-built graphs.
    Plain,
    /// Half-grid vertex at (column, row). Columns may be negative, row 0 is
    /// the boundary row.
    Grid { col: i32, row: u32 },
    /// One of the four private vertices of a K5 attached at a row-0 vertex
    /// of the given column. `index` runs 0..=3.
    K5Private { anchor_col: i32, index: u8 },
    /// One of the five private vertices of a K3,3 attached at a row-0 vertex
    /// of the given column. Indices 0..=1 are in the anchor's class (not
    /// adjacent to the anchor), indices 2..=4 are in the opposite class
    /// (adjacent to the anchor).
    K33Private { anchor_col: i32, index: u8 },
}

impl VertexTag {
    /// Grid column, if this is a grid vertex.
    pub fn grid_col(&self) -> Option<i32> {
        match self {
            VertexTag::Grid { col, .. } => Some(*col),
            _ => None,
        }
    }

    /// Grid position, if this is a grid vertex.
    pub fn grid_pos(&self) -> Option<(i32, u32)> {
        match self {
            VertexTag::Grid { col, row } => Some((*col, *row)),
            _ => None,
        }
    }

    /// The column this vertex belongs to: its own for grid vertices, the
    /// anchor's for attachment privates, none for plain vertices.
    pub fn column(&self) -> Option<i32> {
        match self {
            VertexTag::Plain => None,
            VertexTag::Grid { col, .. } => Some(*col),
            VertexTag::K5Private { anchor_col, .. }
            | VertexTag::K33Private { anchor_col, .. } => Some(*anchor_col),
        }
    }
}

/// Errors raised by graph construction and editing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {vertex} is not allowed in a simple graph")]
    SelfLoop { vertex: usize },
    #[error("expected {expected} vertex tags, got {got}")]
    TagCountMismatch { expected: usize, got: usize },
    #[error("edge ({u}, {v}) is not present")]
    MissingEdge { u: usize, v: usize },
    #[error("adjacency of vertex {u} lists {v}, but not vice versa")]
    AsymmetricAdjacency { u: usize, v: usize },
}

/// An immutable simple graph: sorted adjacency lists over ids `0..n`,
/// plus one [`VertexTag`] per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    tags: Vec<VertexTag>,
    edge_count: usize,
}

/// Result of an operation that re-indexes vertices (deletion, contraction,
/// induced subgraph): the derived graph plus both directions of the id map.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: Graph,
    /// `old_to_new[v]` is `None` when `v` was removed. For a contraction,
    /// both endpoints map to the merged vertex.
    pub old_to_new: Vec<Option<usize>>,
    /// For each new id, one old id it came from (for a contraction, the
    /// smaller old endpoint).
    pub new_to_old: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` plain-tagged vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            neighbors: vec![Vec::new(); n],
            tags: vec![VertexTag::Plain; n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, vertex_count: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph { neighbors, tags: vec![VertexTag::Plain; n], edge_count: edge_count / 2 })
    }

    /// Replaces all vertex tags. The tag vector length must match.
    pub fn with_tags(mut self, tags: Vec<VertexTag>) -> Result<Graph, GraphError> {
        if tags.len() != self.vertex_count() {
            return Err(GraphError::TagCountMismatch {
                expected: self.vertex_count(),
                got: tags.len(),
            });
        }
        self.tags = tags;
        Ok(self)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).expect("complete graph edges are valid")
    }

    /// Complete bipartite graph K_{a,b}; the first `a` ids form one class.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::build(a + b, &edges).expect("bipartite edges are valid")
    }

    /// Path on `n` vertices (ids in path order).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::build(n, &edges).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::build(n, &edges).expect("cycle edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`. Panics on out-of-range ids, like slice
    /// indexing does.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.neighbors.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn tag(&self, v: usize) -> &VertexTag {
        &self.tags[v]
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    /// First vertex carrying the given tag, if any.
    pub fn find_tag(&self, tag: &VertexTag) -> Option<usize> {
        self.tags.iter().position(|t| t == tag)
    }

    /// Grid vertex at (col, row), if present.
    pub fn grid_vertex(&self, col: i32, row: u32) -> Option<usize> {
        self.find_tag(&VertexTag::Grid { col, row })
    }

    /// Checks the representation invariants: adjacency sorted, deduplicated,
    /// loop-free, symmetric; tag count matches; edge count consistent.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if self.tags.len() != n {
            return Err(GraphError::TagCountMismatch { expected: n, got: self.tags.len() });
        }
        let mut count = 0;
        for (u, list) in self.neighbors.iter().enumerate() {
            for window in list.windows(2) {
                if window[0] >= window[1] {
                    return Err(GraphError::AsymmetricAdjacency { u, v: window[1] });
                }
            }
            for &v in list {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop { vertex: u });
                }
                if self.neighbors[v].binary_search(&u).is_err() {
                    return Err(GraphError::AsymmetricAdjacency { u, v });
                }
            }
            count += list.len();
        }
        if count != 2 * self.edge_count {
            return Err(GraphError::TagCountMismatch { expected: 2 * self.edge_count, got: count });
        }
        Ok(())
    }

    /// Disjoint union; vertices of `other` are shifted up by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut neighbors = self.neighbors.clone();
        neighbors.extend(
            other
                .neighbors
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        let mut tags = self.tags.clone();
        tags.extend(other.tags.iter().cloned());
        Graph { neighbors, tags, edge_count: self.edge_count + other.edge_count }
    }

    /// Glues `other` onto `self` by identifying `self`'s vertex `v` with
    /// `other`'s vertex `w` (a 1-sum). Ids of `self` are unchanged; vertex
    /// `j` of `other` becomes `self.vertex_count() + j`, except that ids
    /// above `w` shift down by one and `w` itself becomes `v`. The merged
    /// vertex keeps `self`'s tag.
    pub fn one_sum(&self, v: usize, other: &Graph, w: usize) -> Result<Graph, GraphError> {
        let n1 = self.vertex_count();
        let n2 = other.vertex_count();
        if v >= n1 {
            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n1 });
        }
        if w >= n2 {
            return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count: n2 });
        }
        let map = |j: usize| -> usize {
            if j == w {
                v
            } else if j > w {
                n1 + j - 1
            } else {
                n1 + j
            }
        };
        let mut edges = self.edges();
        for (a, b) in other.edges() {
            edges.push((map(a), map(b)));
        }
        let mut tags = self.tags.clone();
        for (j, t) in other.tags.iter().enumerate() {
            if j != w {
                tags.push(t.clone());
            }
        }
        // Re-sort appended tags into id order: other's tags were pushed in
        // j order, which is already the order of their new ids.
        Graph::build(n1 + n2 - 1, &edges)?.with_tags(tags)
    }

    /// Deletes a set of vertices (duplicates allowed) and re-indexes.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<Reduction, GraphError> {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in remove {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n });
            }
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Induced subgraph on the given vertices (duplicates allowed); new ids
    /// follow the sorted order of the kept old ids.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Reduction, GraphError> {
        let n = self.vertex_count();
        let mut new_to_old: Vec<usize> = keep.to_vec();
        for &v in &new_to_old {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n });
            }
        }
        new_to_old.sort_unstable();
        new_to_old.dedup();
        let mut old_to_new = vec![None; n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut neighbors = Vec::with_capacity(new_to_old.len());
        let mut edge_count = 0;
        for &old in &new_to_old {
            let list: Vec<usize> =
                self.neighbors[old].iter().filter_map(|&u| old_to_new[u]).collect();
            edge_count += list.len();
            neighbors.push(list);
        }
        let tags = new_to_old.iter().map(|&old| self.tags[old].clone()).collect();
        let graph = Graph { neighbors, tags, edge_count: edge_count / 2 };
        Ok(Reduction { graph, old_to_new, new_to_old })
    }

    /// Contracts the edge `(u, v)`: the endpoints merge into one vertex that
    /// inherits both neighborhoods (minus any resulting loop or parallel
    /// edge) and the tag of `min(u, v)`. All other vertices re-index densely
    /// in their old order.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Reduction, GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u, vertex_count: n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge { u, v });
        }
        let (lo, hi) = (u.min(v), u.max(v));
        // New ids: old order with `hi` removed; both endpoints land on
        // `lo`'s slot.
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::with_capacity(n - 1);
        for old in 0..n {
            if old == hi {
                continue;
            }
            old_to_new[old] = Some(new_to_old.len());
            new_to_old.push(old);
        }
        old_to_new[hi] = old_to_new[lo];
        let mut edges = Vec::with_capacity(self.edge_count);
        for (a, b) in self.edges() {
            let (na, nb) = (old_to_new[a].unwrap(), old_to_new[b].unwrap());
            if na != nb {
                edges.push((na, nb));
            }
        }
        let tags = new_to_old.iter().map(|&old| self.tags[old].clone()).collect();
        let graph = Graph::build(n - 1, &edges)?.with_tags(tags)?;
        Ok(Reduction { graph, old_to_new, new_to_old })
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push(start);
            let mut component = Vec::new();
            while let Some(v) = queue.pop() {
                component.push(v);
                for &u in &self.neighbors[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push(u);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, vertex_count: 3 })
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop { vertex: 1 }));
    }

    #[test]
    fn build_collapses_duplicate_edges() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        g.validate().unwrap();
    }

    #[test]
    fn standard_constructions() {
        let k5 = Graph::complete(5);
        assert_eq!((k5.vertex_count(), k5.edge_count()), (5, 10));
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!((k33.vertex_count(), k33.edge_count()), (6, 9));
        assert!(!k33.has_edge(0, 1));
        assert!(k33.has_edge(0, 3));
        let p4 = Graph::path(4);
        assert_eq!((p4.vertex_count(), p4.edge_count()), (4, 3));
        let c5 = Graph::cycle(5);
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        for g in [&k5, &k33, &p4, &c5] {
            g.validate().unwrap();
        }
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let g = Graph::path(2).disjoint_union(&Graph::path(3));
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 3));
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(2, 3) && g.has_edge(3, 4));
        assert!(!g.has_edge(1, 2));
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn one_sum_of_two_edges_is_a_path() {
        let p2 = Graph::path(2);
        let g = p2.one_sum(1, &p2, 0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        assert_eq!(g.neighbors(1), &[0, 2]);
        g.validate().unwrap();
    }

    #[test]
    fn one_sum_keeps_left_tag_on_the_junction() {
        let left = Graph::path(2)
            .with_tags(vec![VertexTag::Plain, VertexTag::Grid { col: 0, row: 0 }])
            .unwrap();
        let right = Graph::path(2)
            .with_tags(vec![VertexTag::Grid { col: 7, row: 7 }, VertexTag::Plain])
            .unwrap();
        let g = left.one_sum(1, &right, 0).unwrap();
        assert_eq!(g.tag(1), &VertexTag::Grid { col: 0, row: 0 });
        assert_eq!(g.tag(2), &VertexTag::Plain);
    }

    #[test]
    fn contract_k5_edge_gives_k4() {
        let r = Graph::complete(5).contract_edge(0, 1).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (4, 6));
        assert_eq!(r.old_to_new, vec![Some(0), Some(0), Some(1), Some(2), Some(3)]);
        assert_eq!(r.new_to_old, vec![0, 2, 3, 4]);
    }

    #[test]
    fn contract_k33_edge() {
        let r = Graph::complete_bipartite(3, 3).contract_edge(0, 3).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (5, 8));
        r.graph.validate().unwrap();
    }

    #[test]
    fn contract_requires_an_edge() {
        assert!(matches!(
            Graph::complete_bipartite(3, 3).contract_edge(0, 1),
            Err(GraphError::MissingEdge { u: 0, v: 1 })
        ));
    }

    #[test]
    fn delete_vertices_reindexes_densely() {
        let c5 = Graph::cycle(5);
        let r = c5.delete_vertices(&[1, 3]).unwrap();
        assert_eq!(r.new_to_old, vec![0, 2, 4]);
        assert_eq!(r.old_to_new, vec![Some(0), None, Some(1), None, Some(2)]);
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (3, 1));
        assert!(r.graph.has_edge(0, 2)); // old edge (0, 4)
    }

    #[test]
    fn induced_subgraph_of_triangle_in_k5() {
        let r = Graph::complete(5).induced_subgraph(&[4, 2, 0, 2]).unwrap();
        assert_eq!(r.new_to_old, vec![0, 2, 4]);
        assert_eq!(r.graph.edge_count(), 3);
    }

    #[test]
    fn components_are_sorted_by_smallest_vertex() {
        let g = Graph::build(6, &[(5, 3), (0, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 2], vec![1], vec![3, 5], vec![4]]);
        assert!(!g.is_connected());
        assert!(Graph::path(4).is_connected());
        assert!(Graph::new(0).is_connected());
    }
}
