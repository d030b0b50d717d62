//! Executable finite shadows of the two structural claims about the
//! doubly-attached host: block confinement with model decomposition
//! ([`verify_lemma1`]), the constructive disjoint-model lower bound
//! ([`verify_proposition_lower`]), and the packing saturation table
//! ([`verify_saturation`]).
//!
//! Every check distinguishes three outcomes: pass, fail, and inconclusive
//! (budget ran out). Inconclusive never counts as a pass.
//!
//! # Example
//!
//! ```
//! use minor_workbench::construct::TruncationParams;
//! use minor_workbench::minor::SearchBudget;
//! use minor_workbench::verify::verify_lemma1;
//!
//! let report = verify_lemma1(&TruncationParams::new(1, 1).unwrap(), &SearchBudget::default())
//!     .unwrap();
//! assert!(report.verdict);
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks::block_decomposition;
use crate::construct::{
    build_g, build_h, build_i, column_sides, ConstructError, TruncationParams, I_CUT,
    I_K33_OTHER_CLASS, I_K33_SAME_CLASS, I_K5_SIDE,
};
use crate::graph::{Graph, GraphError, VertexTag};
use crate::minor::{
    enumerate_models, find_minor_model, verify_model, MinorError, MinorModel, SearchBudget,
    SearchOutcome,
};
use crate::packing::{
    exact_packing, packing_upper_bound_by_cut, validate_packing, Packing, PackingError,
    PackingOutcome,
};
use crate::paths::{PathFamily, PathsError};

/// How many minimal one-sum models each confinement run decomposes.
pub const LEMMA1_MODEL_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("host vertex {vertex} carries no construction tag")]
    UntaggedHost { vertex: usize },
    #[error("model does not decompose: {reason}")]
    NotDecomposable { reason: String },
    #[error("path {path_index} touches the top row, where the component surrogate is undefined")]
    PathTouchesTopRow { path_index: usize },
    #[error("invalid path family: {reason}")]
    InvalidPathFamily { reason: String },
    #[error("ray surrogate with {ray_edges} edges does not fit a width-{width} row")]
    RayDoesNotFit { ray_edges: usize, width: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Paths(#[from] PathsError),
    #[error(transparent)]
    Packing(#[from] PackingError),
}

/// Outcome of the block-confinement and decomposition check.
///
/// `verdict` is true only when every block's Kuratowski content matches its
/// classification, at least one minimal one-sum model was enumerated, and
/// every enumerated model decomposed. When `inconclusive` is set, budget
/// exhaustion prevented a definite answer and `verdict` is forced false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub params: TruncationParams,
    /// Block index → "K5 content as expected": attached K5 blocks must have
    /// a K5 minor, all other blocks must not.
    pub k5_confinement: BTreeMap<usize, bool>,
    /// Block index → "K3,3 content as expected", symmetrically.
    pub k33_confinement: BTreeMap<usize, bool>,
    pub decomposed_models: Vec<DecomposedModel>,
    /// Enumerated models that failed to decompose.
    pub failed_models: usize,
    pub inconclusive: bool,
    pub verdict: bool,
}

/// A minimal one-sum model together with its structural reading: where the
/// K5 side lives, where the K3,3 side lives, and the grid path joining the
/// two attachment vertices inside the cut-vertex branch set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposedModel {
    pub model: MinorModel,
    pub k5_anchor: i32,
    pub path: Vec<usize>,
    pub k33_anchor: i32,
}

/// The structural reading alone, as produced by [`decompose_i_model`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDecomposition {
    pub k5_anchor: i32,
    pub path: Vec<usize>,
    pub k33_anchor: i32,
}

/// Report for the constructive lower bound: `n` pairwise-disjoint models of
/// the ray-extended pattern in the sized-up host, plus the component trace
/// of their crossing paths and a small saturation side table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionReport {
    pub n: usize,
    pub ray_edges: usize,
    pub params: TruncationParams,
    pub lower_packing: Packing,
    pub saturation_table: Vec<SaturationEntry>,
    pub component_trace: Vec<TraceStep>,
    pub inconclusive: bool,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationEntry {
    pub m: usize,
    pub h: usize,
    pub size: usize,
}

/// One step of [`component_trace`]: state after cumulatively deleting the
/// paths up to and including `path_index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub path_index: usize,
    pub components_after_deletion: usize,
    /// Components containing a top-row vertex; must be 1 (the "infinite"
    /// part stays in one piece).
    pub top_row_component_count: usize,
    /// Distinct column-0 vertices consumed so far; disjoint crossing paths
    /// use at least one each (the pigeonhole behind the saturation bound).
    pub column_zero_vertices_used: usize,
}

/// Saturation table: exact packing sizes of the one-sum pattern against the
/// cut certificate, for a range of attachment counts at fixed height.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub h: usize,
    pub rows: Vec<SaturationRow>,
    pub inconclusive: bool,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationRow {
    pub m: usize,
    /// Exact packing size; `None` when the budget ran out for this cell.
    pub packing_size: Option<usize>,
    pub cut_bound: usize,
    /// The conjectured closed form `min(m, h+1)`.
    pub expected: usize,
    pub exhausted: bool,
}

/// Checks block confinement and model decomposition on the standard host.
pub fn verify_lemma1(
    p: &TruncationParams,
    budget: &SearchBudget,
) -> Result<Lemma1Report, VerifyError> {
    verify_lemma1_on(p, &build_g(p), budget)
}

/// Same check against an explicit host graph, so deliberately mutated hosts
/// (negative controls) can be fed through the identical logic.
pub fn verify_lemma1_on(
    p: &TruncationParams,
    host: &Graph,
    budget: &SearchBudget,
) -> Result<Lemma1Report, VerifyError> {
    let decomposition = block_decomposition(host);
    let k5 = Graph::complete(5);
    let k33 = Graph::complete_bipartite(3, 3);
    let mut k5_confinement = BTreeMap::new();
    let mut k33_confinement = BTreeMap::new();
    let mut inconclusive = false;
    for (i, verts) in decomposition.blocks.iter().enumerate() {
        let block_graph = host.induced_subgraph(verts)?.graph;
        let kind = classify_block(host, verts);
        for (pattern, expected, map) in [
            (&k5, matches!(kind, BlockKind::AttachedK5), &mut k5_confinement),
            (&k33, matches!(kind, BlockKind::AttachedK33), &mut k33_confinement),
        ] {
            match find_minor_model(pattern, &block_graph, budget) {
                SearchOutcome::Found(_) => {
                    map.insert(i, expected);
                }
                SearchOutcome::Absent => {
                    map.insert(i, !expected);
                }
                SearchOutcome::Exhausted => {
                    map.insert(i, false);
                    inconclusive = true;
                }
            }
        }
    }
    let enumeration = enumerate_models(&build_i(), host, LEMMA1_MODEL_CAP, budget);
    if !enumeration.complete && enumeration.models.len() < LEMMA1_MODEL_CAP {
        inconclusive = true;
    }
    let mut decomposed_models = Vec::new();
    let mut failed_models = 0;
    for model in &enumeration.models {
        match decompose_i_model(model, host) {
            Ok(d) => decomposed_models.push(DecomposedModel {
                model: model.clone(),
                k5_anchor: d.k5_anchor,
                path: d.path,
                k33_anchor: d.k33_anchor,
            }),
            Err(VerifyError::NotDecomposable { .. }) => failed_models += 1,
            Err(other) => return Err(other),
        }
    }
    let verdict = !inconclusive
        && k5_confinement.values().all(|&ok| ok)
        && k33_confinement.values().all(|&ok| ok)
        && failed_models == 0
        && !decomposed_models.is_empty();
    Ok(Lemma1Report {
        params: *p,
        k5_confinement,
        k33_confinement,
        decomposed_models,
        failed_models,
        inconclusive,
        verdict,
    })
}

enum BlockKind {
    AttachedK5,
    AttachedK33,
    Other,
}

/// Reads a block's role off its tags. An attached K5 block is exactly four
/// same-anchor privates plus the matching row-0 grid vertex in a column
/// where the construction attaches K5s (negative); likewise for K3,3 on
/// nonnegative columns. Anything else — including an attachment at a column
/// the construction rule forbids — is `Other`.
fn classify_block(host: &Graph, verts: &[usize]) -> BlockKind {
    let mut k5_anchors = Vec::new();
    let mut k33_anchors = Vec::new();
    let mut grid_row0_cols = Vec::new();
    for &v in verts {
        match host.tag(v) {
            VertexTag::K5Private { anchor_col, .. } => k5_anchors.push(*anchor_col),
            VertexTag::K33Private { anchor_col, .. } => k33_anchors.push(*anchor_col),
            VertexTag::Grid { col, row: 0 } => grid_row0_cols.push(*col),
            _ => return BlockKind::Other,
        }
    }
    match (k5_anchors.len(), k33_anchors.len(), grid_row0_cols.len()) {
        (4, 0, 1) => {
            let a = k5_anchors[0];
            if k5_anchors.iter().all(|&c| c == a) && grid_row0_cols[0] == a && a < 0 {
                BlockKind::AttachedK5
            } else {
                BlockKind::Other
            }
        }
        (0, 5, 1) => {
            let b = k33_anchors[0];
            if k33_anchors.iter().all(|&c| c == b) && grid_row0_cols[0] == b && b >= 0 {
                BlockKind::AttachedK33
            } else {
                BlockKind::Other
            }
        }
        _ => BlockKind::Other,
    }
}

/// Reads the structure out of a valid minimal one-sum model in a tagged
/// host: the K5-side branch sets must sit in one attached K5 block (anchor
/// column < 0), the K3,3 side in one attached K3,3 block (anchor ≥ 0), and
/// the cut-vertex branch set must be a grid path joining the two anchors.
pub fn decompose_i_model(
    model: &MinorModel,
    host: &Graph,
) -> Result<ModelDecomposition, VerifyError> {
    let pattern = build_i();
    if !verify_model(model, &pattern, host)? {
        return Err(VerifyError::NotDecomposable {
            reason: "not a valid model of the one-sum pattern".into(),
        });
    }
    let k5_anchor = common_anchor(model, host, &I_K5_SIDE, Side::K5)?;
    if k5_anchor >= 0 {
        return Err(VerifyError::NotDecomposable {
            reason: format!("K5 side anchored at column {k5_anchor}, expected negative"),
        });
    }
    let k33_ids: Vec<usize> =
        I_K33_SAME_CLASS.iter().chain(&I_K33_OTHER_CLASS).copied().collect();
    let k33_anchor = common_anchor(model, host, &k33_ids, Side::K33)?;
    if k33_anchor < 0 {
        return Err(VerifyError::NotDecomposable {
            reason: format!("K3,3 side anchored at column {k33_anchor}, expected nonnegative"),
        });
    }
    let path = extract_grid_path(model, host, k5_anchor, k33_anchor)?;
    Ok(ModelDecomposition { k5_anchor, path, k33_anchor })
}

enum Side {
    K5,
    K33,
}

/// All branch vertices of the given pattern ids must lie in a single
/// attachment block: privates of one anchor column, or that anchor itself.
fn common_anchor(
    model: &MinorModel,
    host: &Graph,
    ids: &[usize],
    side: Side,
) -> Result<i32, VerifyError> {
    let mut anchor: Option<i32> = None;
    for &id in ids {
        for &v in &model.branch_sets[&id] {
            let col = match (host.tag(v), &side) {
                (VertexTag::Plain, _) => return Err(VerifyError::UntaggedHost { vertex: v }),
                (VertexTag::K5Private { anchor_col, .. }, Side::K5) => *anchor_col,
                (VertexTag::K33Private { anchor_col, .. }, Side::K33) => *anchor_col,
                (VertexTag::Grid { col, row: 0 }, _) => *col,
                (tag, _) => {
                    return Err(VerifyError::NotDecomposable {
                        reason: format!("branch vertex {v} with tag {tag:?} outside any attachment block"),
                    })
                }
            };
            match anchor {
                None => anchor = Some(col),
                Some(a) if a == col => {}
                Some(a) => {
                    return Err(VerifyError::NotDecomposable {
                        reason: format!("side spans two attachment columns {a} and {col}"),
                    })
                }
            }
        }
    }
    anchor.ok_or_else(|| VerifyError::NotDecomposable { reason: "empty side".into() })
}

/// The cut-vertex branch set must be a chordless grid path from `(a, 0)` to
/// `(b, 0)`, returned in walking order starting at the K5 side.
fn extract_grid_path(
    model: &MinorModel,
    host: &Graph,
    a: i32,
    b: i32,
) -> Result<Vec<usize>, VerifyError> {
    let set = &model.branch_sets[&I_CUT];
    for &v in set {
        match host.tag(v) {
            VertexTag::Grid { .. } => {}
            VertexTag::Plain => return Err(VerifyError::UntaggedHost { vertex: v }),
            tag => {
                return Err(VerifyError::NotDecomposable {
                    reason: format!("cut branch vertex {v} with tag {tag:?} leaves the grid"),
                })
            }
        }
    }
    let start = host.grid_vertex(a, 0).filter(|v| set.binary_search(v).is_ok());
    let goal = host.grid_vertex(b, 0).filter(|v| set.binary_search(v).is_ok());
    let (Some(start), Some(goal)) = (start, goal) else {
        return Err(VerifyError::NotDecomposable {
            reason: format!("cut branch set misses an attachment vertex (({a},0) or ({b},0))"),
        });
    };
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while cur != goal {
        let mut step = None;
        for &w in host.neighbors(cur) {
            if w != prev && set.binary_search(&w).is_ok() {
                if step.is_some() {
                    return Err(VerifyError::NotDecomposable {
                        reason: format!("cut branch set branches at vertex {cur}"),
                    });
                }
                step = Some(w);
            }
        }
        let Some(next) = step else {
            return Err(VerifyError::NotDecomposable {
                reason: format!("cut branch set dead-ends at vertex {cur}"),
            });
        };
        prev = cur;
        cur = next;
        path.push(cur);
    }
    if path.len() != set.len() {
        return Err(VerifyError::NotDecomposable {
            reason: "cut branch set is not a single path".into(),
        });
    }
    Ok(path)
}

/// Constructs `n` pairwise-disjoint models of the ray-extended pattern in
/// the host sized by the documented rule `m = n`, `h = 2n - 1 + L`:
/// crossing paths stack in rows `0..n`, ray surrogates in rows `n..2n`,
/// leaving `L` rows of slack below the top row.
///
/// The witnesses are built directly from the construction geometry (model
/// `j` uses the K5 at column `-j`, the K3,3 at column `j-1`, and a crossing
/// path through row `j-1`), then validated; no search is involved, so the
/// budget only backstops the saturation side table.
pub fn verify_proposition_lower(
    n: usize,
    ray_edges: usize,
    budget: &SearchBudget,
) -> Result<PropositionReport, VerifyError> {
    assert!(n >= 1, "need at least one model");
    assert!(ray_edges >= 1, "ray surrogate needs at least one edge");
    let params = TruncationParams::new(n, 2 * n - 1 + ray_edges)?;
    if ray_edges + 1 > 2 * params.m + 1 {
        return Err(VerifyError::RayDoesNotFit {
            ray_edges,
            width: 2 * params.m + 1,
        });
    }
    let host = build_g(&params);
    let pattern = build_h(ray_edges)?;
    let mut models = Vec::new();
    let mut crossing_paths = Vec::new();
    for j in 1..=n {
        let (model, path) = h_witness(&host, &params, j, ray_edges)?;
        models.push(model);
        crossing_paths.push(path);
    }
    let lower_packing = Packing { pattern, models };
    let packing_ok = validate_packing(&lower_packing, &host)?;
    let trace = component_trace(&params, &PathFamily { paths: crossing_paths })?;
    let trace_ok = trace.iter().all(|s| s.top_row_component_count == 1);
    let mut saturation_table = Vec::new();
    let mut inconclusive = false;
    for m in 1..=n {
        let flat = TruncationParams::new(m, 0)?;
        match exact_packing(&build_i(), &build_g(&flat), 2, budget) {
            PackingOutcome::Reached(p) => {
                saturation_table.push(SaturationEntry { m, h: 0, size: p.models.len() })
            }
            PackingOutcome::UpperBounded { best } => {
                saturation_table.push(SaturationEntry { m, h: 0, size: best.models.len() })
            }
            PackingOutcome::Exhausted => inconclusive = true,
        }
    }
    let verdict = !inconclusive && packing_ok && lower_packing.models.len() == n && trace_ok;
    Ok(PropositionReport {
        n,
        ray_edges,
        params,
        lower_packing,
        saturation_table,
        component_trace: trace,
        inconclusive,
        verdict,
    })
}

/// Builds witness `j`: the one-sum model on K5 column `-j`, K3,3 column
/// `j-1`, crossing through row `j-1`, plus a ray surrogate along row
/// `n-1+j` starting at the leftmost column. Returns the model and its
/// crossing path.
fn h_witness(
    host: &Graph,
    params: &TruncationParams,
    j: usize,
    ray_edges: usize,
) -> Result<(MinorModel, Vec<usize>), VerifyError> {
    let grid = |col: i32, row: u32| {
        host.grid_vertex(col, row).ok_or_else(|| VerifyError::NotDecomposable {
            reason: format!("construction bug: missing grid vertex ({col},{row})"),
        })
    };
    let private = |tag: VertexTag| {
        host.find_tag(&tag).ok_or_else(|| VerifyError::NotDecomposable {
            reason: format!("construction bug: missing attachment vertex {tag:?}"),
        })
    };
    let a = -(j as i32);
    let b = j as i32 - 1;
    let corridor = (j - 1) as u32;
    let mut sets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &id) in I_K5_SIDE.iter().enumerate() {
        sets.insert(id, vec![private(VertexTag::K5Private { anchor_col: a, index: i as u8 })?]);
    }
    for (i, &id) in I_K33_SAME_CLASS.iter().enumerate() {
        sets.insert(
            id,
            vec![private(VertexTag::K33Private { anchor_col: b, index: i as u8 })?],
        );
    }
    for (i, &id) in I_K33_OTHER_CLASS.iter().enumerate() {
        sets.insert(
            id,
            vec![private(VertexTag::K33Private { anchor_col: b, index: (i + 2) as u8 })?],
        );
    }
    let mut path = Vec::new();
    for row in 0..=corridor {
        path.push(grid(a, row)?);
    }
    for col in (a + 1)..=b {
        path.push(grid(col, corridor)?);
    }
    for row in (0..corridor).rev() {
        path.push(grid(b, row)?);
    }
    sets.insert(I_CUT, path.clone());
    let ray_row = (params.m - 1 + j) as u32;
    let leftmost = -(params.m as i32);
    for t in 0..=ray_edges {
        sets.insert(10 + t, vec![grid(leftmost + t as i32, ray_row)?]);
    }
    Ok((MinorModel::new(sets), path))
}

/// Cumulatively deletes crossing paths and watches the components: after
/// each deletion exactly one component should still reach the top row (the
/// stand-in for the infinite part), and `k` deleted disjoint crossing paths
/// must have consumed at least `k` distinct column-0 vertices.
pub fn component_trace(
    p: &TruncationParams,
    family: &PathFamily,
) -> Result<Vec<TraceStep>, VerifyError> {
    let host = build_g(p);
    let top_row = p.h as u32;
    let mut seen = vec![false; host.vertex_count()];
    for (i, path) in family.paths.iter().enumerate() {
        if path.is_empty() {
            return Err(VerifyError::InvalidPathFamily {
                reason: format!("path {i} is empty"),
            });
        }
        for pair in path.windows(2) {
            if !host.has_edge(pair[0], pair[1]) {
                return Err(VerifyError::InvalidPathFamily {
                    reason: format!("path {i} uses a non-edge ({}, {})", pair[0], pair[1]),
                });
            }
        }
        for &v in path {
            let Some((_, row)) = host.tag(v).grid_pos() else {
                return Err(VerifyError::InvalidPathFamily {
                    reason: format!("path {i} leaves the grid at vertex {v}"),
                });
            };
            if row == top_row {
                return Err(VerifyError::PathTouchesTopRow { path_index: i });
            }
            if seen[v] {
                return Err(VerifyError::InvalidPathFamily {
                    reason: format!("paths overlap at vertex {v}"),
                });
            }
            seen[v] = true;
        }
        let first = host.tag(path[0]).grid_pos().expect("checked above");
        let last = host.tag(*path.last().expect("nonempty")).grid_pos().expect("checked above");
        if !(first.1 == 0 && first.0 < 0 && last.1 == 0 && last.0 >= 0) {
            return Err(VerifyError::InvalidPathFamily {
                reason: format!(
                    "path {i} is not a crossing path: runs ({},{}) to ({},{})",
                    first.0, first.1, last.0, last.1
                ),
            });
        }
    }
    let mut steps = Vec::new();
    let mut deleted: Vec<usize> = Vec::new();
    let mut column_zero_used = 0usize;
    for (i, path) in family.paths.iter().enumerate() {
        deleted.extend_from_slice(path);
        column_zero_used +=
            path.iter().filter(|&&v| host.tag(v).column() == Some(0)).count();
        let remaining = host.delete_vertices(&deleted)?.graph;
        let components = remaining.connected_components();
        let top_row_component_count = components
            .iter()
            .filter(|comp| {
                comp.iter().any(|&v| matches!(remaining.tag(v).grid_pos(), Some((_, r)) if r == top_row))
            })
            .count();
        steps.push(TraceStep {
            path_index: i,
            components_after_deletion: components.len(),
            top_row_component_count,
            column_zero_vertices_used: column_zero_used,
        });
    }
    Ok(steps)
}

/// Exact packing sizes of the one-sum pattern in `build_g(m, h)` for each
/// `m`, against the column-0 cut certificate. The verdict requires every
/// cell to be conclusive, to match `min(m, h+1)`, to respect the cut bound,
/// and to be constant from `m = h+1` on.
pub fn verify_saturation(
    h: usize,
    m_range: &[usize],
    budget: &SearchBudget,
) -> Result<SaturationReport, VerifyError> {
    let pattern = build_i();
    let mut rows = Vec::new();
    let mut inconclusive = false;
    for &m in m_range {
        let params = TruncationParams::new(m, h)?;
        let host = build_g(&params);
        let (left, right) = column_sides(&host);
        let cut_bound = packing_upper_bound_by_cut(&host, &left, &right)?;
        let (packing_size, exhausted) =
            match exact_packing(&pattern, &host, cut_bound + 1, budget) {
                PackingOutcome::Reached(p) => (Some(p.models.len()), false),
                PackingOutcome::UpperBounded { best } => (Some(best.models.len()), false),
                PackingOutcome::Exhausted => (None, true),
            };
        if exhausted {
            inconclusive = true;
        }
        rows.push(SaturationRow {
            m,
            packing_size,
            cut_bound,
            expected: m.min(h + 1),
            exhausted,
        });
    }
    let conclusive = rows.iter().all(|r| r.packing_size.is_some());
    let matches_expected = rows
        .iter()
        .all(|r| r.packing_size.is_none_or(|s| s == r.expected && s <= r.cut_bound));
    let saturated_tail: Vec<usize> = rows
        .iter()
        .filter(|r| r.m >= h + 1)
        .filter_map(|r| r.packing_size)
        .collect();
    let constant_tail = saturated_tail.windows(2).all(|w| w[0] == w[1]);
    let verdict = conclusive && matches_expected && constant_tail && !inconclusive;
    Ok(SaturationReport { h, rows, inconclusive, verdict })
}
