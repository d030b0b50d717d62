//! Minor-model testing: witness verification, exact branch-and-bound search
//! and bounded enumeration of inclusion-minimal models, a delete/contract
//! reference oracle for tiny hosts, and Kuratowski classification.
//!
//! A *minor model* of a pattern graph in a host graph assigns to every
//! pattern vertex a nonempty *branch set* of host vertices so that branch
//! sets are pairwise disjoint, each induces a connected subgraph, and every
//! pattern edge is realized by some host edge between the two branch sets.
//!
//! # Example
//!
//! ```
//! use minor_workbench::graph::Graph;
//! use minor_workbench::minor::{find_minor_model, SearchBudget, SearchOutcome};
//!
//! // Contracting one edge of a 4-cycle leaves a triangle.
//! let outcome = find_minor_model(&Graph::complete(3), &Graph::cycle(4), &SearchBudget::default());
//! match outcome {
//!     SearchOutcome::Found(model) => assert_eq!(model.branch_sets.len(), 3),
//!     other => panic!("expected Found, got {other:?}"),
//! }
//! ```

mod oracle;
mod planar;
mod search;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use oracle::{has_minor_oracle, has_minor_oracle_with_limit, DEFAULT_ORACLE_LIMIT};

use crate::bits::Bits;
use crate::graph::{Graph, GraphError};

/// A witness that the pattern is a minor of the host: one branch set per
/// pattern vertex id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinorModel {
    /// Pattern vertex id → sorted host vertex ids.
    pub branch_sets: BTreeMap<usize, Vec<usize>>,
}

impl MinorModel {
    /// Normalizes the given mapping (sorts and deduplicates each branch
    /// set).
    pub fn new(mut branch_sets: BTreeMap<usize, Vec<usize>>) -> MinorModel {
        for set in branch_sets.values_mut() {
            set.sort_unstable();
            set.dedup();
        }
        MinorModel { branch_sets }
    }

    /// The identity model of a graph in itself: singleton branch sets.
    pub fn identity(k: usize) -> MinorModel {
        MinorModel { branch_sets: (0..k).map(|v| (v, vec![v])).collect() }
    }

    /// All host vertices used by the model, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.branch_sets.values().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// The branch sets as a sorted family, forgetting which pattern vertex
    /// owns which set. Two models are interchangeable for packing and
    /// enumeration purposes exactly when these agree.
    pub fn family(&self) -> Vec<Vec<usize>> {
        let mut family: Vec<Vec<usize>> = self.branch_sets.values().cloned().collect();
        family.sort();
        family
    }

    /// Rewrites host vertex ids through a translation table (e.g. the
    /// `new_to_old` map of a reduction), keeping pattern ids.
    pub fn translate(&self, table: &[usize]) -> MinorModel {
        let branch_sets = self
            .branch_sets
            .iter()
            .map(|(&p, set)| (p, set.iter().map(|&v| table[v]).collect()))
            .collect();
        MinorModel::new(branch_sets)
    }
}

/// Exploration limit for the search engine.
///
/// `max_expansions` bounds the number of search-tree nodes. The
/// `determinism_seed` field is reserved for randomized exploration
/// strategies; the canonical sequential search is fully deterministic and
/// never reads it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_expansions: u64,
    pub determinism_seed: u64,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget { max_expansions: 20_000_000, determinism_seed: 0 }
    }
}

impl SearchBudget {
    pub fn with_max_expansions(max_expansions: u64) -> SearchBudget {
        SearchBudget { max_expansions, ..SearchBudget::default() }
    }
}

/// Three-valued search result: budget exhaustion is never conflated with a
/// proof of absence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(MinorModel),
    Absent,
    Exhausted,
}

/// Result of bounded model enumeration. `complete` is true when the search
/// space was fully explored below the cap, i.e. the list is ALL minimal
/// models, not just the first few.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub models: Vec<MinorModel>,
    pub complete: bool,
}

/// Kuratowski classification of a graph, with witnesses where they exist.
/// At this scale planarity is *defined* as the absence of both minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KuratowskiClass {
    Planar,
    HasK5 { k5: MinorModel },
    HasK33 { k33: MinorModel },
    Both { k5: MinorModel, k33: MinorModel },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("host has {n} vertices, above the delete/contract oracle limit {limit}")]
    HostTooLargeForOracle { n: usize, limit: usize },
    #[error("model is missing a branch set for pattern vertex {vertex}")]
    MissingBranchSet { vertex: usize },
    #[error("model is not a valid minor model, cannot minimize it")]
    InvalidModel,
    #[error("search budget exhausted before a definite answer")]
    BudgetExhausted,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Checks the three minor-model invariants. Returns `false` for a
/// well-formed but invalid witness; returns an error when ids are out of
/// range or branch sets are missing entirely.
pub fn verify_model(
    model: &MinorModel,
    pattern: &Graph,
    host: &Graph,
) -> Result<bool, MinorError> {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    for p in 0..k {
        if !model.branch_sets.contains_key(&p) {
            return Err(MinorError::MissingBranchSet { vertex: p });
        }
    }
    for (&p, set) in &model.branch_sets {
        if p >= k {
            return Err(GraphError::VertexOutOfRange { vertex: p, vertex_count: k }.into());
        }
        for &v in set {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count: n }.into());
            }
        }
    }
    // Nonempty and pairwise disjoint.
    let mut used = Bits::new(n);
    for set in model.branch_sets.values() {
        if set.is_empty() {
            return Ok(false);
        }
        for &v in set {
            if used.get(v) {
                return Ok(false);
            }
            used.set(v);
        }
    }
    // Each branch set induces a connected subgraph.
    for set in model.branch_sets.values() {
        if !set_is_connected(host, set) {
            return Ok(false);
        }
    }
    // Every pattern edge is realized by a host edge between branch sets.
    for (p, q) in pattern.edges() {
        if !sets_touch(host, &model.branch_sets[&p], &model.branch_sets[&q]) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn set_is_connected(host: &Graph, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut inside = Bits::new(host.vertex_count());
    for &v in set {
        inside.set(v);
    }
    let mut seen = Bits::new(host.vertex_count());
    let mut queue = vec![set[0]];
    seen.set(set[0]);
    let mut count = 1;
    while let Some(v) = queue.pop() {
        for &w in host.neighbors(v) {
            if inside.get(w) && !seen.get(w) {
                seen.set(w);
                count += 1;
                queue.push(w);
            }
        }
    }
    count == set.len()
}

pub(crate) fn sets_touch(host: &Graph, a: &[usize], b: &[usize]) -> bool {
    // Scan the smaller side's adjacency.
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small.iter().any(|&v| host.neighbors(v).iter().any(|w| big.binary_search(w).is_ok()))
}

/// Greedily shrinks a valid model to an inclusion-minimal one: repeatedly
/// drop the smallest-id host vertex whose removal keeps its branch set
/// nonempty, connected and in contact with all pattern-neighbor sets.
pub fn shrink_to_minimal(
    model: &MinorModel,
    pattern: &Graph,
    host: &Graph,
) -> Result<MinorModel, MinorError> {
    if !verify_model(model, pattern, host)? {
        return Err(MinorError::InvalidModel);
    }
    let mut sets: BTreeMap<usize, Vec<usize>> = model.branch_sets.clone();
    'outer: loop {
        // Candidates ordered by host vertex id.
        let mut candidates: Vec<(usize, usize)> = sets
            .iter()
            .flat_map(|(&p, set)| set.iter().map(move |&v| (v, p)))
            .collect();
        candidates.sort_unstable();
        for (v, p) in candidates {
            if sets[&p].len() == 1 {
                continue;
            }
            let mut reduced = sets[&p].clone();
            reduced.retain(|&w| w != v);
            let still_ok = set_is_connected(host, &reduced)
                && pattern
                    .neighbors(p)
                    .iter()
                    .all(|&q| sets_touch(host, &reduced, &sets[&q]));
            if still_ok {
                sets.insert(p, reduced);
                continue 'outer;
            }
        }
        break;
    }
    Ok(MinorModel { branch_sets: sets })
}

/// Ceiling on intermediate enumerations inside the recursive composition;
/// a sub-pattern with more minimal models than this makes the overall
/// enumeration incomplete (reported, never silent).
const SUB_ENUMERATION_CAP: usize = 100_000;

/// The host subgraphs a raw search has to cover, with translation tables
/// back to host ids.
///
/// For a 2-connected pattern on at least three vertices, every
/// inclusion-minimal model lies inside a single block of the host: take a
/// minimal model whose union of branch sets spans a cut vertex `v` of its
/// own subgraph, `v` lying in branch set `C`. Each other branch set is
/// connected and misses `v`, so it sits entirely on one side of `v`; any
/// two sets on opposite sides can only be pattern-adjacent through `C`, so
/// deleting the one pattern vertex of `C` would disconnect the pattern —
/// impossible. Hence all sets except `C` share one side, and the far side's
/// vertices of `C` realize no contact (a contact edge would bypass `v`),
/// contradicting minimality. Searching block by block is therefore
/// exhaustive, and much cheaper than the whole host.
fn search_scopes(pattern: &Graph, host: &Graph) -> Vec<(Graph, Vec<usize>)> {
    let k = pattern.vertex_count();
    if k >= 3 && crate::blocks::is_biconnected(pattern) {
        let decomposition = crate::blocks::block_decomposition(host);
        if decomposition.blocks.len() > 1 {
            return decomposition
                .blocks
                .iter()
                .filter(|block| block.len() >= k)
                .map(|block| {
                    let r = host.induced_subgraph(block).expect("block vertices are in range");
                    (r.graph, r.new_to_old)
                })
                .collect();
        }
    }
    vec![(host.clone(), (0..host.vertex_count()).collect())]
}

/// Whether the pattern is K5 or K3,3 by shape. For exactly these two
/// patterns, a planar scope certifies absence outright (Kuratowski /
/// Wagner), letting the search skip the scope instead of exhausting it.
/// K3,3 is recognized as the unique triangle-free cubic graph on six
/// vertices.
fn excluded_by_planarity(pattern: &Graph) -> bool {
    let n = pattern.vertex_count();
    let m = pattern.edge_count();
    if n == 5 && m == 10 {
        return true;
    }
    n == 6
        && m == 9
        && (0..6).all(|v| pattern.neighbors(v).len() == 3)
        && !has_triangle(pattern)
}

fn has_triangle(g: &Graph) -> bool {
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            for &w in g.neighbors(v) {
                if w > v && g.has_edge(u, w) {
                    return true;
                }
            }
        }
    }
    false
}

/// How a pattern splits for the composition engine.
enum PatternSplit {
    /// `keep1`/`keep2` partition the vertices; no shared vertex.
    Components { keep1: Vec<usize>, keep2: Vec<usize> },
    /// `keep1 ∩ keep2 = {cut}`; branch sets for `cut` from the two sides
    /// are merged via a connector.
    OneSum { keep1: Vec<usize>, keep2: Vec<usize>, cut: usize },
}

/// Splits a disconnected pattern into one component and the rest, or a
/// connected pattern at its smallest cut vertex into one leaf part and the
/// rest. `None` means the pattern is a unit for the raw search (biconnected
/// or trivial).
fn split_pattern(pattern: &Graph) -> Option<PatternSplit> {
    let components = pattern.connected_components();
    if components.len() > 1 {
        let keep1 = components[0].clone();
        let mut keep2: Vec<usize> = components[1..].iter().flatten().copied().collect();
        keep2.sort_unstable();
        return Some(PatternSplit::Components { keep1, keep2 });
    }
    let decomposition = crate::blocks::block_decomposition(pattern);
    let &cut = decomposition.cut_vertices.iter().min()?;
    // Components of pattern − cut; the first becomes one side.
    let k = pattern.vertex_count();
    let mut comp_of = vec![usize::MAX; k];
    let mut next = 0;
    for s in 0..k {
        if s == cut || comp_of[s] != usize::MAX {
            continue;
        }
        let mut queue = vec![s];
        comp_of[s] = next;
        while let Some(v) = queue.pop() {
            for &w in pattern.neighbors(v) {
                if w != cut && comp_of[w] == usize::MAX {
                    comp_of[w] = next;
                    queue.push(w);
                }
            }
        }
        next += 1;
    }
    let mut keep1: Vec<usize> = (0..k).filter(|&v| v != cut && comp_of[v] == 0).collect();
    let mut keep2: Vec<usize> = (0..k).filter(|&v| v != cut && comp_of[v] != 0).collect();
    keep1.push(cut);
    keep2.push(cut);
    keep1.sort_unstable();
    keep2.sort_unstable();
    Some(PatternSplit::OneSum { keep1, keep2, cut })
}

/// Recursive enumeration state shared across composition levels.
struct Enumerator<'g> {
    host: &'g Graph,
    remaining: u64,
    host_nbrs: Vec<Bits>,
}

impl<'g> Enumerator<'g> {
    fn new(host: &'g Graph, budget: &SearchBudget) -> Enumerator<'g> {
        let n = host.vertex_count();
        let mut host_nbrs = vec![Bits::new(n); n];
        for v in 0..n {
            for &w in host.neighbors(v) {
                host_nbrs[v].set(w);
            }
        }
        Enumerator { host, remaining: budget.max_expansions, host_nbrs }
    }

    fn charge(&mut self, cost: u64) -> bool {
        if self.remaining < cost {
            self.remaining = 0;
            return false;
        }
        self.remaining -= cost;
        true
    }

    /// Enumerates distinct inclusion-minimal models of `pattern` (with its
    /// own vertex ids) in the full host, up to `cap`.
    fn enumerate(&mut self, pattern: &Graph, cap: usize) -> Enumeration {
        let k = pattern.vertex_count();
        if k == 0 {
            return Enumeration {
                models: vec![MinorModel { branch_sets: BTreeMap::new() }],
                complete: true,
            };
        }
        if k > self.host.vertex_count() || pattern.edge_count() > self.host.edge_count() {
            return Enumeration { models: Vec::new(), complete: true };
        }
        // Closed forms for the smallest patterns. A minimal model of a
        // single vertex is a host vertex; of a single edge, a host edge
        // (anything larger shrinks). The raw search would wade through
        // every connected superset instead.
        if k == 1 {
            let models: Vec<MinorModel> = (0..self.host.vertex_count())
                .take(cap)
                .map(|v| MinorModel { branch_sets: BTreeMap::from([(0, vec![v])]) })
                .collect();
            let complete = models.len() == self.host.vertex_count();
            return Enumeration { models, complete };
        }
        if k == 2 && pattern.edge_count() == 1 {
            let mut models = Vec::new();
            let mut complete = true;
            'edges: for a in 0..self.host.vertex_count() {
                for &b in self.host.neighbors(a) {
                    if a < b {
                        if models.len() >= cap {
                            complete = false;
                            break 'edges;
                        }
                        models.push(MinorModel {
                            branch_sets: BTreeMap::from([(0, vec![a]), (1, vec![b])]),
                        });
                    }
                }
            }
            return Enumeration { models, complete };
        }
        match split_pattern(pattern) {
            None => self.enumerate_raw(pattern, cap),
            Some(split) => self.enumerate_composed(pattern, &split, cap),
        }
    }

    /// Bottom of the recursion: block-scoped branch-and-bound search.
    fn enumerate_raw(&mut self, pattern: &Graph, cap: usize) -> Enumeration {
        let k = pattern.vertex_count();
        let kuratowski = excluded_by_planarity(pattern);
        let mut models: Vec<MinorModel> = Vec::new();
        let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
        let mut complete = true;
        for (scope, new_to_old) in search_scopes(pattern, self.host) {
            if k > scope.vertex_count() || pattern.edge_count() > scope.edge_count() {
                continue;
            }
            if kuratowski && planar::is_planar(&scope) {
                continue;
            }
            if models.len() >= cap {
                complete = false;
                break;
            }
            let (enumeration, used) =
                search::run_enumerate(pattern, &scope, cap - models.len(), self.remaining);
            self.charge(used);
            if !enumeration.complete {
                complete = false;
            }
            for m in enumeration.models {
                let translated = m.translate(&new_to_old);
                if seen.insert(translated.family()) {
                    models.push(translated);
                }
            }
        }
        Enumeration { models, complete }
    }

    /// Composition step. Minimal models of the whole pattern are exactly
    /// the results of: take minimal models of the two sides with all
    /// disjointness respected, merge the cut vertex's two branch sets via a
    /// minimal connector through unused host vertices (or directly, when
    /// they already overlap or touch), and shrink. Proof sketch: given a
    /// minimal model M, shrinking its restrictions to the two sides yields
    /// side models whose sets lie inside M's; both cut-sets sit inside
    /// M(cut), which is connected, so a connector inside M(cut) exists, and
    /// chord-shortcutting plus truncation turns it into one this step
    /// enumerates. The glued model sits pointwise inside M and is valid, so
    /// by minimality it *is* M.
    fn enumerate_composed(
        &mut self,
        pattern: &Graph,
        split: &PatternSplit,
        cap: usize,
    ) -> Enumeration {
        let (keep1, keep2, cut) = match split {
            PatternSplit::Components { keep1, keep2 } => (keep1, keep2, None),
            PatternSplit::OneSum { keep1, keep2, cut } => (keep1, keep2, Some(*cut)),
        };
        let part1 = pattern.induced_subgraph(keep1).expect("split vertices are in range");
        let part2 = pattern.induced_subgraph(keep2).expect("split vertices are in range");
        let sub1 = self.enumerate(&part1.graph, SUB_ENUMERATION_CAP);
        let sub2 = self.enumerate(&part2.graph, SUB_ENUMERATION_CAP);
        let mut complete = sub1.complete && sub2.complete;
        let side1 = self.side_models(&sub1.models, &part1, cut);
        let side2 = self.side_models(&sub2.models, &part2, cut);
        let mut models: Vec<MinorModel> = Vec::new();
        let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
        let n = self.host.vertex_count();
        'pairs: for (m1, support1, cut1) in &side1 {
            for (m2, support2, cut2) in &side2 {
                if !self.charge(1) {
                    complete = false;
                    break 'pairs;
                }
                // Non-cut sets of one side must avoid everything of the
                // other; only the two cut-sets may overlap.
                if support1.intersects(support2)
                    || support1.intersects(cut2)
                    || support2.intersects(cut1)
                {
                    continue;
                }
                let Some(cut) = cut else {
                    // Disjoint components: no connector needed.
                    let glued = glue_models(m1, m2, None, &[]);
                    if !self.emit(pattern, glued, cap, &mut models, &mut seen, &mut complete) {
                        break 'pairs;
                    }
                    continue;
                };
                let direct = cut1.intersects(cut2)
                    || cut1.iter_ones().any(|v| self.host_nbrs[v].intersects(cut2));
                if direct {
                    let glued = glue_models(m1, m2, Some(cut), &[]);
                    if !self.emit(pattern, glued, cap, &mut models, &mut seen, &mut complete) {
                        break 'pairs;
                    }
                    continue;
                }
                // Free vertices for connectors: everything unused by both.
                let mut free = Bits::new(n);
                for v in 0..n {
                    free.set(v);
                }
                free.subtract(support1);
                free.subtract(support2);
                free.subtract(cut1);
                free.subtract(cut2);
                let mut connectors = Vec::new();
                if !self.minimal_connectors(cut1, cut2, &free, &mut connectors) {
                    complete = false;
                    break 'pairs;
                }
                for path in connectors {
                    let glued = glue_models(m1, m2, Some(cut), &path);
                    if !self.emit(pattern, glued, cap, &mut models, &mut seen, &mut complete) {
                        break 'pairs;
                    }
                }
            }
        }
        Enumeration { models, complete }
    }

    /// Prepares one side of a composition: every usable assignment of each
    /// sub-model, rewritten to parent pattern ids, with its non-cut support
    /// mask and cut-set mask.
    ///
    /// Sub-enumerations keep one representative per branch-set family, but
    /// gluing cares which set plays the cut vertex: a K5 block's model can
    /// put the cut on the block's attachment vertex or on a private vertex,
    /// and only the former can reach a connector. [`cut_variants`] recovers
    /// every family-preserving choice, so nothing the dedup folded away is
    /// lost.
    fn side_models(
        &mut self,
        subs: &[MinorModel],
        part: &crate::graph::Reduction,
        cut: Option<usize>,
    ) -> Vec<(MinorModel, Bits, Bits)> {
        let n = self.host.vertex_count();
        let cut_pos = cut.map(|c| part.old_to_new[c].expect("cut vertex is kept in both parts"));
        let mut out = Vec::new();
        for m in subs {
            let variants = match cut_pos {
                None => vec![m.clone()],
                Some(cp) => self.cut_variants(&part.graph, cp, m),
            };
            for variant in variants {
                let relabeled = relabel_positions(&variant, &part.new_to_old);
                let mut support = Bits::new(n);
                let mut cutset = Bits::new(n);
                for (&p, set) in &relabeled.branch_sets {
                    for &v in set {
                        if Some(p) == cut {
                            cutset.set(v);
                        } else {
                            support.set(v);
                        }
                    }
                }
                out.push((relabeled, support, cutset));
            }
        }
        out
    }

    /// All reassignments of a sub-model's branch sets that stay valid and
    /// give the cut position a distinct set: for each candidate position
    /// `q`, looks for an injective map of part vertices onto the model's
    /// positions sending `cut_pos` to `q` and every part edge to a pair of
    /// touching sets. One witness per `q` suffices — gluing only reads the
    /// family and the cut-set.
    fn cut_variants(&mut self, part: &Graph, cut_pos: usize, m: &MinorModel) -> Vec<MinorModel> {
        let kp = part.vertex_count();
        let masks: Vec<Bits> = (0..kp)
            .map(|p| {
                let mut b = Bits::new(self.host.vertex_count());
                for &v in &m.branch_sets[&p] {
                    b.set(v);
                }
                b
            })
            .collect();
        // touch[p] = positions whose branch set is host-adjacent to p's.
        let mut touch = vec![Bits::new(kp); kp];
        for p in 0..kp {
            let mut reach = Bits::new(self.host.vertex_count());
            for v in masks[p].iter_ones() {
                reach.union_with(&self.host_nbrs[v]);
            }
            for q in 0..kp {
                if q != p && reach.intersects(&masks[q]) {
                    touch[p].set(q);
                }
            }
        }
        // Assign part vertices in a fixed order, cut first, checking edges
        // back into the assigned prefix.
        let order: Vec<usize> =
            std::iter::once(cut_pos).chain((0..kp).filter(|&x| x != cut_pos)).collect();
        let mut variants = Vec::new();
        for q in 0..kp {
            self.charge(1);
            let mut image = vec![usize::MAX; kp];
            let mut used = vec![false; kp];
            image[cut_pos] = q;
            used[q] = true;
            if embed_rest(part, &touch, &order, 1, &mut image, &mut used) {
                let branch_sets =
                    (0..kp).map(|p| (p, m.branch_sets[&image[p]].clone())).collect();
                variants.push(MinorModel { branch_sets });
            }
        }
        variants
    }

    /// Shrinks a glued model, deduplicates it by family, and appends it.
    /// Returns false when the enumeration should stop (cap or budget).
    fn emit(
        &mut self,
        pattern: &Graph,
        glued: MinorModel,
        cap: usize,
        models: &mut Vec<MinorModel>,
        seen: &mut BTreeSet<Vec<Vec<usize>>>,
        complete: &mut bool,
    ) -> bool {
        if !self.charge(1) {
            *complete = false;
            return false;
        }
        debug_assert_eq!(verify_model(&glued, pattern, self.host), Ok(true));
        let minimal = shrink_to_minimal(&glued, pattern, self.host)
            .expect("glued models satisfy all model invariants");
        if seen.insert(minimal.family()) {
            models.push(minimal);
            if models.len() >= cap {
                *complete = false;
                return false;
            }
        }
        true
    }

    /// All minimal connector paths from `from` to `to` through `free`
    /// vertices: induced paths whose first vertex is the only one adjacent
    /// to `from` and whose last vertex is the only one adjacent to `to`.
    /// Any connector inside an unknown connected superset shortcuts down to
    /// one of these, so they suffice for completeness of the composition.
    /// Returns false when the budget ran out mid-enumeration.
    fn minimal_connectors(
        &mut self,
        from: &Bits,
        to: &Bits,
        free: &Bits,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        let n = self.host.vertex_count();
        let mut from_adj = Bits::new(n);
        let mut to_adj = Bits::new(n);
        for v in from.iter_ones() {
            from_adj.union_with(&self.host_nbrs[v]);
        }
        for v in to.iter_ones() {
            to_adj.union_with(&self.host_nbrs[v]);
        }
        let starts: Vec<usize> = free.iter_ones().filter(|&v| from_adj.get(v)).collect();
        let mut path = Vec::new();
        let mut on_path = Bits::new(n);
        for v0 in starts {
            path.push(v0);
            on_path.set(v0);
            if !self.connector_dfs(&from_adj, &to_adj, free, &mut path, &mut on_path, out) {
                return false;
            }
            on_path.clear(v0);
            path.pop();
        }
        true
    }

    fn connector_dfs(
        &mut self,
        from_adj: &Bits,
        to_adj: &Bits,
        free: &Bits,
        path: &mut Vec<usize>,
        on_path: &mut Bits,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if !self.charge(1) {
            return false;
        }
        let last = *path.last().expect("paths start nonempty");
        if to_adj.get(last) {
            out.push(path.clone());
            return true;
        }
        let candidates: Vec<usize> = self.host_nbrs[last]
            .iter_ones()
            .filter(|&w| {
                free.get(w)
                    && !on_path.get(w)
                    && !from_adj.get(w)
                    && self.host_nbrs[w].intersection_count(on_path) == 1
            })
            .collect();
        for w in candidates {
            path.push(w);
            on_path.set(w);
            let ok = self.connector_dfs(from_adj, to_adj, free, path, on_path, out);
            on_path.clear(w);
            path.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Backtracking worker for [`Enumerator::cut_variants`]: extends a partial
/// injective assignment `image` of part vertices to model positions so that
/// every part edge lands on touching branch sets.
fn embed_rest(
    part: &Graph,
    touch: &[Bits],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..touch.len() {
        if used[y] {
            continue;
        }
        let consistent = part
            .neighbors(x)
            .iter()
            .all(|&x2| image[x2] == usize::MAX || touch[y].get(image[x2]));
        if !consistent {
            continue;
        }
        image[x] = y;
        used[y] = true;
        if embed_rest(part, touch, order, depth + 1, image, used) {
            return true;
        }
        image[x] = usize::MAX;
        used[y] = false;
    }
    false
}

/// Rewrites the pattern ids of a sub-model through the split's vertex
/// table, keeping host ids.
fn relabel_positions(model: &MinorModel, table: &[usize]) -> MinorModel {
    MinorModel {
        branch_sets: model.branch_sets.iter().map(|(&p, s)| (table[p], s.clone())).collect(),
    }
}

/// Merges two side models; the `cut` branch sets (when present) are
/// unioned together with the connector path.
fn glue_models(m1: &MinorModel, m2: &MinorModel, cut: Option<usize>, path: &[usize]) -> MinorModel {
    let mut branch_sets = m1.branch_sets.clone();
    for (&p, set) in &m2.branch_sets {
        branch_sets.entry(p).or_default().extend(set.iter().copied());
    }
    if let Some(c) = cut {
        branch_sets.get_mut(&c).expect("cut set present").extend(path.iter().copied());
    }
    MinorModel::new(branch_sets)
}

/// Exact minor search. `Found` models are inclusion-minimal and verified;
/// `Absent` means the search space was provably exhausted; `Exhausted`
/// means the budget ran out first. Deterministic for identical inputs.
///
/// Patterns with more than 64 vertices are outside the workbench's intended
/// range and panic.
pub fn find_minor_model(pattern: &Graph, host: &Graph, budget: &SearchBudget) -> SearchOutcome {
    let k = pattern.vertex_count();
    assert!(k <= 64, "patterns with more than 64 vertices are not supported");
    if k == 0 {
        return SearchOutcome::Found(MinorModel { branch_sets: BTreeMap::new() });
    }
    if k > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return SearchOutcome::Absent;
    }
    if split_pattern(pattern).is_none() {
        // Biconnected or trivial: the raw search stops at the first leaf,
        // no composition pass needed.
        let kuratowski = excluded_by_planarity(pattern);
        let mut remaining = budget.max_expansions;
        for (scope, new_to_old) in search_scopes(pattern, host) {
            if k > scope.vertex_count() || pattern.edge_count() > scope.edge_count() {
                continue;
            }
            if kuratowski && planar::is_planar(&scope) {
                continue;
            }
            let (found, exhausted, used) = search::run_find(pattern, &scope, remaining);
            remaining = remaining.saturating_sub(used);
            if let Some(raw) = found {
                let translated = raw.translate(&new_to_old);
                let minimal = shrink_to_minimal(&translated, pattern, host)
                    .expect("search returns valid models");
                debug_assert_eq!(verify_model(&minimal, pattern, host), Ok(true));
                return SearchOutcome::Found(minimal);
            }
            if exhausted {
                return SearchOutcome::Exhausted;
            }
        }
        return SearchOutcome::Absent;
    }
    let e = enumerate_models(pattern, host, 1, budget);
    match e.models.into_iter().next() {
        Some(model) => SearchOutcome::Found(model),
        None if e.complete => SearchOutcome::Absent,
        None => SearchOutcome::Exhausted,
    }
}

/// Enumerates up to `cap` distinct inclusion-minimal models, deduplicated
/// by branch-set family (pattern relabelings of the same vertex partition
/// count once), in deterministic discovery order.
pub fn enumerate_models(
    pattern: &Graph,
    host: &Graph,
    cap: usize,
    budget: &SearchBudget,
) -> Enumeration {
    let k = pattern.vertex_count();
    assert!(k <= 64, "patterns with more than 64 vertices are not supported");
    if cap == 0 {
        return Enumeration { models: Vec::new(), complete: false };
    }
    Enumerator::new(host, budget).enumerate(pattern, cap)
}

/// Classifies a graph by searching for K5 and K3,3 minors. Budget
/// exhaustion on either search is an explicit error, never a silent
/// "planar".
pub fn kuratowski_class(g: &Graph, budget: &SearchBudget) -> Result<KuratowskiClass, MinorError> {
    let k5 = match find_minor_model(&Graph::complete(5), g, budget) {
        SearchOutcome::Found(m) => Some(m),
        SearchOutcome::Absent => None,
        SearchOutcome::Exhausted => return Err(MinorError::BudgetExhausted),
    };
    let k33 = match find_minor_model(&Graph::complete_bipartite(3, 3), g, budget) {
        SearchOutcome::Found(m) => Some(m),
        SearchOutcome::Absent => None,
        SearchOutcome::Exhausted => return Err(MinorError::BudgetExhausted),
    };
    Ok(match (k5, k33) {
        (None, None) => KuratowskiClass::Planar,
        (Some(k5), None) => KuratowskiClass::HasK5 { k5 },
        (None, Some(k33)) => KuratowskiClass::HasK33 { k33 },
        (Some(k5), Some(k33)) => KuratowskiClass::Both { k5, k33 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_g, build_h, build_i, half_grid, TruncationParams};

    fn model(sets: &[&[usize]]) -> MinorModel {
        MinorModel::new(
            sets.iter().enumerate().map(|(p, set)| (p, set.to_vec())).collect(),
        )
    }

    #[test]
    fn identity_model_verifies() {
        let k5 = Graph::complete(5);
        assert_eq!(verify_model(&MinorModel::identity(5), &k5, &k5), Ok(true));
    }

    #[test]
    fn overlapping_branch_sets_fail() {
        let k3 = Graph::complete(3);
        let m = model(&[&[0], &[1], &[1]]);
        assert_eq!(verify_model(&m, &k3, &k3), Ok(false));
    }

    #[test]
    fn petersen_spokes_contract_to_k5() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let petersen = Graph::build(10, &edges).unwrap();
        let spokes = model(&[&[0, 5], &[1, 6], &[2, 7], &[3, 8], &[4, 9]]);
        assert_eq!(verify_model(&spokes, &Graph::complete(5), &petersen), Ok(true));
    }

    #[test]
    fn verify_rejects_bad_ids() {
        let k3 = Graph::complete(3);
        let m = model(&[&[0], &[1]]);
        assert!(matches!(
            verify_model(&m, &k3, &k3),
            Err(MinorError::MissingBranchSet { vertex: 2 })
        ));
        let m = model(&[&[0], &[1], &[7]]);
        assert!(matches!(verify_model(&m, &k3, &k3), Err(MinorError::Graph(_))));
    }

    #[test]
    fn disconnected_branch_set_fails() {
        let p3 = Graph::path(3);
        let m = MinorModel::new([(0, vec![0, 2]), (1, vec![1])].into());
        assert_eq!(verify_model(&m, &Graph::path(2), &p3), Ok(false));
    }

    #[test]
    fn shrink_drops_padding() {
        let c5 = Graph::cycle(5);
        // Contracting two cycle edges leaves a triangle; every vertex is
        // already load-bearing, so shrinking changes nothing.
        let triangle = model(&[&[0, 1], &[2, 3], &[4]]);
        assert_eq!(verify_model(&triangle, &Graph::complete(3), &c5), Ok(true));
        assert_eq!(shrink_to_minimal(&triangle, &Graph::complete(3), &c5).unwrap(), triangle);
        // A path model with padding at both ends shrinks to the middle.
        let p3 = Graph::path(3);
        let padded = model(&[&[0, 1], &[2], &[3, 4]]);
        let minimal = shrink_to_minimal(&padded, &p3, &c5).unwrap();
        assert_eq!(minimal, model(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn find_in_self_returns_singletons() {
        let g = build_i();
        match find_minor_model(&g, &g, &SearchBudget::default()) {
            SearchOutcome::Found(m) => {
                assert_eq!(m.family().iter().map(Vec::len).sum::<usize>(), 10);
                assert_eq!(verify_model(&m, &g, &g), Ok(true));
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn pattern_larger_than_host_is_absent() {
        let outcome = find_minor_model(
            &Graph::complete_bipartite(3, 3),
            &Graph::complete(5),
            &SearchBudget::default(),
        );
        assert_eq!(outcome, SearchOutcome::Absent);
    }

    #[test]
    fn k5_found_in_attached_block_only() {
        let host = build_g(&TruncationParams::new(1, 1).unwrap());
        match find_minor_model(&Graph::complete(5), &host, &SearchBudget::default()) {
            SearchOutcome::Found(m) => {
                // The only K5 lives in the attached block {(-1,0)} ∪ privates.
                assert_eq!(m.support(), vec![0, 6, 7, 8, 9]);
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn planar_grid_has_no_kuratowski_minor() {
        let grid = half_grid(&TruncationParams::new(2, 2).unwrap());
        let budget = SearchBudget::default();
        assert_eq!(
            find_minor_model(&Graph::complete(5), &grid, &budget),
            SearchOutcome::Absent
        );
        assert_eq!(
            find_minor_model(&Graph::complete_bipartite(3, 3), &grid, &budget),
            SearchOutcome::Absent
        );
        assert_eq!(kuratowski_class(&grid, &budget), Ok(KuratowskiClass::Planar));
    }

    #[test]
    fn larger_grid_is_still_planar() {
        let grid = half_grid(&TruncationParams::new(3, 3).unwrap());
        assert_eq!(
            kuratowski_class(&grid, &SearchBudget::default()),
            Ok(KuratowskiClass::Planar)
        );
    }

    #[test]
    fn kuratowski_witnesses() {
        let budget = SearchBudget::default();
        match kuratowski_class(&Graph::complete_bipartite(3, 3), &budget) {
            Ok(KuratowskiClass::HasK33 { k33 }) => {
                assert_eq!(k33.support().len(), 6);
            }
            other => panic!("expected HasK33, got {other:?}"),
        }
        let g = build_g(&TruncationParams::new(1, 1).unwrap());
        assert!(matches!(kuratowski_class(&g, &budget), Ok(KuratowskiClass::Both { .. })));
    }

    #[test]
    fn tiny_budget_reports_exhausted() {
        // The host's K5 block is nonplanar, so no certificate settles that
        // scope; three expansions cannot even place five branch sets.
        let g = build_g(&TruncationParams::new(1, 1).unwrap());
        let outcome =
            find_minor_model(&Graph::complete(5), &g, &SearchBudget::with_max_expansions(3));
        assert_eq!(outcome, SearchOutcome::Exhausted);
        assert_eq!(
            kuratowski_class(&g, &SearchBudget::with_max_expansions(3)),
            Err(MinorError::BudgetExhausted)
        );
    }

    #[test]
    fn enumerate_k5_in_itself() {
        let k5 = Graph::complete(5);
        let e = enumerate_models(&k5, &k5, 10, &SearchBudget::default());
        assert!(e.complete);
        assert_eq!(e.models.len(), 1);
        assert_eq!(e.models[0].family(), vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn enumerate_respects_planarity() {
        let grid = half_grid(&TruncationParams::new(2, 2).unwrap());
        let e = enumerate_models(&Graph::complete_bipartite(3, 3), &grid, 1, &SearchBudget::default());
        assert!(e.complete);
        assert!(e.models.is_empty());
    }

    #[test]
    fn enumerated_models_are_minimal_and_deduplicated() {
        let host = build_g(&TruncationParams::new(1, 1).unwrap());
        let e = enumerate_models(&Graph::complete(5), &host, 10, &SearchBudget::default());
        assert!(e.complete);
        assert_eq!(e.models.len(), 1, "only the attached block carries a K5");
        for m in &e.models {
            assert_eq!(verify_model(&m, &Graph::complete(5), &host), Ok(true));
            let shrunk = shrink_to_minimal(m, &Graph::complete(5), &host).unwrap();
            assert_eq!(&shrunk, m, "enumerated models are already minimal");
        }
    }

    #[test]
    fn disconnected_pattern_in_connected_host() {
        // Two disjoint triangles inside K7: needs 6 of the 7 vertices.
        let pattern = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let host = Graph::complete(7);
        match find_minor_model(&pattern, &host, &SearchBudget::default()) {
            SearchOutcome::Found(m) => assert_eq!(verify_model(&m, &pattern, &host), Ok(true)),
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn ray_pattern_fits_next_to_the_one_sum() {
        let pattern = build_h(2).unwrap();
        let host = build_g(&TruncationParams::new(1, 3).unwrap());
        match find_minor_model(&pattern, &host, &SearchBudget::default()) {
            SearchOutcome::Found(m) => assert_eq!(verify_model(&m, &pattern, &host), Ok(true)),
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn oracle_agrees_on_small_cases() {
        // Cross-checks on hand-picked instances; the random suite lives in
        // the acceptance tests.
        let budget = SearchBudget::default();
        let cases: Vec<(Graph, Graph)> = vec![
            (Graph::complete(3), Graph::cycle(5)),
            (Graph::complete(4), Graph::complete(4)),
            (Graph::path(4), Graph::complete(3)),
            (Graph::cycle(4), Graph::cycle(5)),
            (Graph::complete_bipartite(3, 3), Graph::complete(5)),
            (Graph::complete(3), Graph::path(5)),
        ];
        for (pattern, host) in cases {
            let oracle = has_minor_oracle(&pattern, &host).unwrap();
            let search = find_minor_model(&pattern, &host, &budget);
            match (oracle, search) {
                (true, SearchOutcome::Found(_)) | (false, SearchOutcome::Absent) => {}
                (o, s) => panic!("oracle {o} vs search {s:?}"),
            }
        }
    }
}
