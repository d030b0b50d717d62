//! Families of pairwise vertex-disjoint minor models: a deletion-based
//! greedy lower bound, an exact packing search over enumerated minimal
//! models, and a cut-based certified upper bound.
//!
//! # Example
//!
//! ```
//! use minor_workbench::construct::{build_g, TruncationParams};
//! use minor_workbench::graph::Graph;
//! use minor_workbench::minor::SearchBudget;
//! use minor_workbench::packing::greedy_packing;
//!
//! // Each attached K5 block yields its own disjoint K5 model.
//! let host = build_g(&TruncationParams::new(2, 1).unwrap());
//! let packing = greedy_packing(&Graph::complete(5), &host, &SearchBudget::default());
//! assert_eq!(packing.models.len(), 2);
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::Bits;
use crate::graph::{Graph, GraphError};
use crate::minor::{
    enumerate_models, find_minor_model, verify_model, MinorError, MinorModel, SearchBudget,
    SearchOutcome,
};
use crate::paths::{min_vertex_cut, PathsError};

/// Enumeration ceiling for [`exact_packing`]. If a host admits more
/// distinct minimal models than this, exactness is given up explicitly
/// ([`PackingOutcome::Exhausted`]) rather than silently.
pub const EXACT_ENUMERATION_CAP: usize = 100_000;

/// A family of pairwise vertex-disjoint models of one pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Packing {
    pub pattern: Graph,
    pub models: Vec<MinorModel>,
}

/// Result of the exact packing decision for a given target size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PackingOutcome {
    /// `target` disjoint models exist; here are that many.
    Reached(Packing),
    /// Provably fewer than `target` disjoint models exist; `best` is a
    /// maximum packing.
    UpperBounded { best: Packing },
    /// The budget or the enumeration cap ran out before a proof either way.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Minor(#[from] MinorError),
}

/// Checks every model and pairwise disjointness of their supports.
pub fn validate_packing(packing: &Packing, host: &Graph) -> Result<bool, PackingError> {
    let mut used = Bits::new(host.vertex_count());
    for model in &packing.models {
        if !verify_model(model, &packing.pattern, host)? {
            return Ok(false);
        }
        for v in model.support() {
            if used.get(v) {
                return Ok(false);
            }
            used.set(v);
        }
    }
    Ok(true)
}

/// Greedy lower bound: find a model, delete its vertices, repeat until the
/// search says `Absent` (or gives up on the shrunken host). The result size
/// is a lower bound on the packing number, never a proof of maximality.
pub fn greedy_packing(pattern: &Graph, host: &Graph, budget: &SearchBudget) -> Packing {
    let mut models = Vec::new();
    let mut current = host.clone();
    let mut to_original: Vec<usize> = (0..host.vertex_count()).collect();
    loop {
        match find_minor_model(pattern, &current, budget) {
            SearchOutcome::Found(model) => {
                models.push(model.translate(&to_original));
                let reduction = current
                    .delete_vertices(&model.support())
                    .expect("model support lies in the current host");
                to_original = reduction.new_to_old.iter().map(|&v| to_original[v]).collect();
                current = reduction.graph;
            }
            SearchOutcome::Absent | SearchOutcome::Exhausted => break,
        }
    }
    Packing { pattern: pattern.clone(), models }
}

/// Exact packing decision: enumerate all inclusion-minimal models, then
/// branch-and-bound over disjoint subsets. Minimal models suffice — any
/// disjoint family stays disjoint after shrinking each member.
///
/// Deterministic. `Reached` may be returned even from an incomplete
/// enumeration (a witness is a witness); `UpperBounded` requires the full
/// model list, so an overflowing enumeration yields `Exhausted`.
pub fn exact_packing(
    pattern: &Graph,
    host: &Graph,
    target: usize,
    budget: &SearchBudget,
) -> PackingOutcome {
    assert!(target >= 1, "exact_packing requires target >= 1");
    let enumeration = enumerate_models(pattern, host, EXACT_ENUMERATION_CAP, budget);
    let n = host.vertex_count();
    let masks: Vec<Bits> = enumeration
        .models
        .iter()
        .map(|m| {
            let mut mask = Bits::new(n);
            for v in m.support() {
                mask.set(v);
            }
            mask
        })
        .collect();
    let mut search = PackSearch {
        masks: &masks,
        target,
        best: Vec::new(),
        chosen: Vec::new(),
        used: Bits::new(n),
        reached: false,
        nodes: 0,
        max_nodes: budget.max_expansions,
        node_overflow: false,
    };
    search.explore(0);
    let pick = |indices: &[usize]| Packing {
        pattern: pattern.clone(),
        models: indices.iter().map(|&i| enumeration.models[i].clone()).collect(),
    };
    if search.reached {
        return PackingOutcome::Reached(pick(&search.best));
    }
    if !enumeration.complete || search.node_overflow {
        return PackingOutcome::Exhausted;
    }
    PackingOutcome::UpperBounded { best: pick(&search.best) }
}

struct PackSearch<'a> {
    masks: &'a [Bits],
    target: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
    used: Bits,
    reached: bool,
    nodes: u64,
    max_nodes: u64,
    node_overflow: bool,
}

impl PackSearch<'_> {
    fn explore(&mut self, from: usize) {
        if self.nodes >= self.max_nodes {
            self.node_overflow = true;
            return;
        }
        self.nodes += 1;
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= self.target {
                self.reached = true;
                return;
            }
        }
        // Even taking every remaining model cannot beat the best.
        if self.chosen.len() + (self.masks.len() - from) <= self.best.len() {
            return;
        }
        for i in from..self.masks.len() {
            if self.masks[i].intersects(&self.used) {
                continue;
            }
            self.used.union_with(&self.masks[i]);
            self.chosen.push(i);
            self.explore(i + 1);
            self.chosen.pop();
            self.used.subtract(&self.masks[i]);
            if self.reached || self.node_overflow {
                return;
            }
        }
    }
}

/// Certified upper bound: when every model of the pattern at hand must
/// contain a path from `left` to `right` (as every model of a connected
/// pattern meeting both sides does), no packing can exceed the minimum
/// vertex cut between the two sides.
pub fn packing_upper_bound_by_cut(
    host: &Graph,
    left: &[usize],
    right: &[usize],
) -> Result<usize, PathsError> {
    Ok(min_vertex_cut(host, left, right)?.vertices.len())
}
