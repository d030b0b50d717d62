//! A workbench for graph minors in one-dimensional "half-grid" hosts:
//! building the attachment constructions, finding and enumerating minor
//! models, decomposing graphs into blocks, packing disjoint models against
//! Menger-style cut certificates, and verifying the structural claims the
//! constructions were designed around.
//!
//! The `examples/` directory is the intended front door; each example is a
//! runnable walkthrough of one capability. The `workbench` binary exposes
//! the same operations as subcommands.
//!
//! # Example
//!
//! ```
//! use minor_workbench::construct::{build_g, build_i, TruncationParams};
//! use minor_workbench::minor::{find_minor_model, SearchBudget, SearchOutcome};
//!
//! let host = build_g(&TruncationParams::new(2, 1).unwrap());
//! let pattern = build_i();
//! match find_minor_model(&pattern, &host, &SearchBudget::default()) {
//!     SearchOutcome::Found(model) => assert_eq!(model.branch_sets.len(), 10),
//!     other => panic!("expected a model, got {other:?}"),
//! }
//! ```

mod bits;

pub mod blocks;
pub mod construct;
pub mod graph;
pub mod io;
pub mod minor;
pub mod packing;
pub mod paths;
pub mod recipe;
pub mod verify;
