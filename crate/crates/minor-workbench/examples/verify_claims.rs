//! Run the three structural checks the constructions were built around.
//!
//! 1. Confinement: in `G(m, h)` every minimal model of `I` splits into a
//!    K5 side inside one attached K5 block, a K3,3 side inside one
//!    attached K3,3 block, and a grid path between their anchors.
//! 2. Lower bound: `G(n, 2n-1+r)` holds `n` pairwise-disjoint models of
//!    the ray-extended pattern `H(r)`, with a component trace showing the
//!    crossing paths burn through column 0.
//! 3. Saturation: the exact packing number of `I` in `G(m, h)` climbs to
//!    `h+1` and then stays there as `m` grows.
//!
//! Each check returns a serializable report with an explicit verdict and
//! an `inconclusive` flag that is set instead of guessing whenever the
//! search budget runs out.
//!
//! Run with `cargo run --example verify_claims`.

use minor_workbench::minor::SearchBudget;
use minor_workbench::verify::{verify_lemma1, verify_proposition_lower, verify_saturation};
use minor_workbench::construct::TruncationParams;

fn main() {
    let budget = SearchBudget::default();

    // 1. Confinement of every minimal model, all four small sizes.
    for (m, h) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let params = TruncationParams::new(m, h).expect("valid window");
        let report = verify_lemma1(&params, &budget).expect("check runs");
        assert!(report.verdict && !report.inconclusive);
        println!(
            "confinement G({m},{h}): {} models decomposed, {} failed — {}",
            report.decomposed_models.len(),
            report.failed_models,
            if report.verdict { "PASS" } else { "FAIL" }
        );
    }

    // 2. Constructive lower bound with the component trace.
    let report = verify_proposition_lower(2, 2, &budget).expect("check runs");
    assert!(report.verdict && !report.inconclusive);
    println!(
        "\nlower bound n=2, ray=2: {} disjoint models in G({}, {}) — {}",
        report.lower_packing.models.len(),
        report.params.m,
        report.params.h,
        if report.verdict { "PASS" } else { "FAIL" }
    );
    println!("  trace (cumulative path deletion):");
    for step in &report.component_trace {
        println!(
            "    after path {}: {} components, top row in {} piece(s), {} column-0 vertices used",
            step.path_index,
            step.components_after_deletion,
            step.top_row_component_count,
            step.column_zero_vertices_used
        );
    }

    // 3. Saturation of the packing number at h+1.
    for h in [0, 1] {
        let report = verify_saturation(h, &[1, 2, 3, 4], &budget).expect("check runs");
        assert!(report.verdict && !report.inconclusive);
        println!("\nsaturation h={h}:");
        for row in &report.rows {
            println!(
                "  m={}: packing {} (expected {}, cut bound {})",
                row.m,
                row.packing_size.map_or("?".to_string(), |s| s.to_string()),
                row.expected,
                row.cut_bound
            );
        }
        println!(
            "  verdict: {}",
            if report.verdict { "PASS" } else { "FAIL" }
        );
    }
}
