//! Property tests for the engine invariants: witnesses verify and are
//! minimal, search agrees with the delete/contract oracle, path/cut
//! duality holds, serialization round-trips, block decompositions obey
//! the block axioms, and the recipe language round-trips through its
//! printer.

use std::collections::BTreeSet;

use proptest::collection::vec;
use proptest::prelude::*;

use minor_workbench::blocks::block_decomposition;
use minor_workbench::graph::{Graph, VertexTag};
use minor_workbench::io::{from_graph6, from_json, to_graph6, to_json};
use minor_workbench::minor::{
    find_minor_model, has_minor_oracle, kuratowski_class, verify_model, KuratowskiClass,
    SearchBudget, SearchOutcome,
};
use minor_workbench::paths::{max_vertex_disjoint_paths, min_vertex_cut, validate_path_family};
use minor_workbench::recipe::{parse_recipe, AttachPattern, ColCmp, Recipe, Statement};

/// A random simple graph on up to `max_n` vertices: one bit per vertex
/// pair, biased by `density` percent.
fn arb_graph(max_n: usize, density: u8) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        vec(0u8..100, n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] < density {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::build(n, &edges).expect("pairs are distinct")
        })
    })
}

fn small_pattern() -> impl Strategy<Value = Graph> {
    prop_oneof![
        Just(Graph::complete(3)),
        Just(Graph::path(3)),
        Just(Graph::path(4)),
        Just(Graph::cycle(4)),
        Just(Graph::complete(4)),
        Just(Graph::complete_bipartite(2, 3)),
    ]
}

fn separates(g: &Graph, sources: &[usize], sinks: &[usize], cut: &BTreeSet<usize>) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let mut queue: Vec<usize> = sources.iter().copied().filter(|s| !cut.contains(s)).collect();
    for &s in &queue {
        seen[s] = true;
    }
    while let Some(v) = queue.pop() {
        if sinks.contains(&v) {
            return false;
        }
        for &w in g.neighbors(v) {
            if !cut.contains(&w) && !seen[w] {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    true
}

proptest! {
    /// Search and the delete/contract oracle never disagree, and the
    /// default budget never runs dry at this scale.
    #[test]
    fn search_agrees_with_oracle(host in arb_graph(7, 40), pattern in small_pattern()) {
        let expected = has_minor_oracle(&pattern, &host).unwrap();
        match find_minor_model(&pattern, &host, &SearchBudget::default()) {
            SearchOutcome::Found(_) => prop_assert!(expected),
            SearchOutcome::Absent => prop_assert!(!expected),
            SearchOutcome::Exhausted => prop_assert!(false, "budget exhausted on a tiny host"),
        }
    }

    /// Every witness satisfies the model conditions and is inclusion-
    /// minimal: dropping any single vertex from any branch set breaks it.
    #[test]
    fn witnesses_verify_and_are_minimal(host in arb_graph(8, 50), pattern in small_pattern()) {
        if let SearchOutcome::Found(model) = find_minor_model(&pattern, &host, &SearchBudget::default()) {
            prop_assert_eq!(verify_model(&model, &pattern, &host), Ok(true));
            for (&p, set) in &model.branch_sets {
                for &drop in set {
                    if set.len() == 1 {
                        continue; // emptying a branch set is not a candidate
                    }
                    let mut smaller = model.clone();
                    let entry = smaller.branch_sets.get_mut(&p).unwrap();
                    entry.retain(|&v| v != drop);
                    prop_assert_ne!(
                        verify_model(&smaller, &pattern, &host),
                        Ok(true),
                        "dropping {} from branch set {} kept the model valid",
                        drop,
                        p
                    );
                }
            }
        }
    }

    /// Planarity here is literally "neither K5 nor K3,3 as a minor", and
    /// it is monotone: removing an edge cannot create a Kuratowski minor.
    #[test]
    fn planarity_is_monotone_under_edge_deletion(g in arb_graph(8, 50), pick in any::<prop::sample::Index>()) {
        let budget = SearchBudget::default();
        if kuratowski_class(&g, &budget) == Ok(KuratowskiClass::Planar) && g.edge_count() > 0 {
            let mut edges = g.edges();
            let removed = pick.index(edges.len());
            edges.remove(removed);
            let smaller = Graph::build(g.vertex_count(), &edges).unwrap();
            prop_assert_eq!(kuratowski_class(&smaller, &budget), Ok(KuratowskiClass::Planar));
        }
    }

    /// Max disjoint paths equals min vertex cut, the family validates,
    /// and the returned cut really separates.
    #[test]
    fn path_cut_duality(g in arb_graph(10, 40), picks in vec(any::<prop::sample::Index>(), 4)) {
        let n = g.vertex_count();
        let mut terminals: BTreeSet<usize> = picks.iter().map(|ix| ix.index(n)).collect();
        let s = *terminals.iter().next().unwrap();
        terminals.remove(&s);
        let sources = vec![s];
        let sinks: Vec<usize> = terminals.into_iter().collect();
        prop_assume!(!sinks.is_empty());

        let family = max_vertex_disjoint_paths(&g, &sources, &sinks).unwrap();
        let cut = min_vertex_cut(&g, &sources, &sinks).unwrap();
        prop_assert!(validate_path_family(&family, &g, &sources, &sinks).unwrap());
        prop_assert_eq!(family.paths.len(), cut.vertices.len());
        let cut_set: BTreeSet<usize> = cut.vertices.iter().copied().collect();
        prop_assert!(separates(&g, &sources, &sinks, &cut_set));
    }

    /// graph6 encodes structure bit-exactly in both directions.
    #[test]
    fn graph6_round_trip(g in arb_graph(20, 50)) {
        let g6 = to_graph6(&g);
        let back = from_graph6(&g6).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(to_graph6(&back), g6);
    }

    /// JSON keeps everything, including vertex tags.
    #[test]
    fn json_round_trip_keeps_tags(g in arb_graph(12, 50), cols in vec(-3i32..=3, 12)) {
        let tags: Vec<VertexTag> = (0..g.vertex_count())
            .map(|v| match v % 4 {
                0 => VertexTag::Plain,
                1 => VertexTag::Grid { col: cols[v], row: (v / 4) as u32 },
                2 => VertexTag::K5Private { anchor_col: cols[v], index: (v % 4) as u8 },
                _ => VertexTag::K33Private { anchor_col: cols[v], index: (v % 6) as u8 },
            })
            .collect();
        let tagged = Graph::build(g.vertex_count(), &g.edges()).unwrap().with_tags(tags).unwrap();
        let json = to_json(&tagged);
        let back = from_json(&json).unwrap();
        prop_assert_eq!(&back, &tagged);
        prop_assert_eq!(to_json(&back), json);
    }

    /// Block axioms: edges partition into blocks, blocks overlap in at
    /// most one vertex, and the block-cut tree is a forest.
    #[test]
    fn block_decomposition_axioms(g in arb_graph(12, 40)) {
        let d = block_decomposition(&g);
        for (u, v) in g.edges() {
            let containing = d.blocks.iter().filter(|b| b.contains(&u) && b.contains(&v)).count();
            prop_assert_eq!(containing, 1, "edge ({},{}) in {} blocks", u, v, containing);
        }
        for i in 0..d.blocks.len() {
            for j in (i + 1)..d.blocks.len() {
                let shared = d.blocks[i].iter().filter(|v| d.blocks[j].contains(v)).count();
                prop_assert!(shared <= 1);
            }
        }
        let nodes = d.blocks.len() + d.cut_vertices.len();
        let mut parent: Vec<usize> = (0..nodes).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(b, c) in &d.tree_edges {
            let slot = d.cut_vertices.iter().position(|&v| v == c).unwrap();
            let (rb, rc) = (root(&mut parent, b), root(&mut parent, d.blocks.len() + slot));
            prop_assert_ne!(rb, rc, "cycle in block-cut tree");
            parent[rb] = rc;
        }
    }

    /// Printing a recipe and parsing it back is the identity.
    #[test]
    fn recipe_print_parse_round_trip(
        choices in vec((0..2usize, 0..5usize), 0..4)
    ) {
        let mut statements = vec![Statement::Base];
        for (p, c) in choices {
            let pattern = [AttachPattern::K5, AttachPattern::K33][p];
            let cmp = [ColCmp::Lt, ColCmp::Le, ColCmp::Gt, ColCmp::Ge, ColCmp::Eq][c];
            statements.push(Statement::Attach { pattern, cmp });
        }
        let recipe = Recipe { statements };
        let reparsed = parse_recipe(&recipe.to_string()).unwrap();
        prop_assert_eq!(reparsed, recipe);
    }
}
