//! Decide minor containment and inspect the witness.
//!
//! A minor model maps each pattern vertex to a nonempty connected set of
//! host vertices (its branch set); branch sets are pairwise disjoint and
//! every pattern edge must run between its two branch sets. The search
//! returns an inclusion-minimal witness, a proof of absence, or an
//! explicit "budget ran out" — never a silent wrong answer.
//!
//! Run with `cargo run --example find_minor`.

use minor_workbench::construct::{build_g, build_i, half_grid, TruncationParams};
use minor_workbench::graph::Graph;
use minor_workbench::minor::{
    find_minor_model, kuratowski_class, verify_model, KuratowskiClass, SearchBudget,
    SearchOutcome,
};

fn main() {
    let budget = SearchBudget::default();
    let params = TruncationParams::new(1, 1).expect("valid window");
    let host = build_g(&params);
    let pattern = build_i();

    match find_minor_model(&pattern, &host, &budget) {
        SearchOutcome::Found(model) => {
            println!(
                "I is a minor of G(1,1); witness uses {} of {} host vertices",
                model.support().len(),
                host.vertex_count()
            );
            for (p, set) in &model.branch_sets {
                println!("  pattern vertex {p} -> host {set:?}");
            }
            // The witness re-checks against the definition.
            assert_eq!(verify_model(&model, &pattern, &host), Ok(true));
        }
        other => panic!("expected a model, got {other:?}"),
    }

    // The bare half-grid is planar, so neither K5 nor K3,3 fits.
    let grid = half_grid(&TruncationParams::new(3, 3).unwrap());
    let k5 = Graph::complete(5);
    let k33 = Graph::complete_bipartite(3, 3);
    assert!(matches!(
        find_minor_model(&k5, &grid, &budget),
        SearchOutcome::Absent
    ));
    assert!(matches!(
        find_minor_model(&k33, &grid, &budget),
        SearchOutcome::Absent
    ));
    println!("half-grid(3,3): no K5 minor, no K3,3 minor");

    // Kuratowski classification wraps the two searches: a graph is planar
    // here exactly when neither K5 nor K3,3 fits.
    match kuratowski_class(&host, &budget).unwrap() {
        KuratowskiClass::Both { k5, k33 } => println!(
            "G(1,1) carries both Kuratowski minors (witnesses on {} and {} vertices)",
            k5.support().len(),
            k33.support().len()
        ),
        other => panic!("expected both minors, got {other:?}"),
    }
    assert_eq!(kuratowski_class(&grid, &budget), Ok(KuratowskiClass::Planar));
    println!("half-grid(3,3) is planar by the same classification");

    // A starved budget reports exhaustion instead of guessing.
    let tiny = SearchBudget::with_max_expansions(3);
    match find_minor_model(&pattern, &host, &tiny) {
        SearchOutcome::Exhausted => println!("budget of 3 expansions: Exhausted (inconclusive)"),
        other => panic!("expected exhaustion, got {other:?}"),
    }
}
