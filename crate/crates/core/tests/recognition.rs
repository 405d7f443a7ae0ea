mod common;

use common::{arb_graph, brute_chromatic};
use nglab_core::enumerate::enumerate_graphs;
use nglab_core::generators::{build_ng, AShape, NgBlueprint};
use nglab_core::oracle::{
    automorphisms, chromatic_number, coloring_isolating, distinguishing_colorings,
    distinguishing_number, is_color_critical,
};
use nglab_core::recognition::{is_ng_oracle, passing_candidates, recognize_ng, NgType};
use nglab_core::Graph;
use proptest::prelude::*;

fn arb_blueprint(max_rest: usize) -> impl Strategy<Value = NgBlueprint> {
    let shape = prop_oneof![Just(AShape::CliqueA), Just(AShape::IndependentA), Just(AShape::FiveCycleA)];
    (shape, 1..=5usize, 0..=max_rest, 0..=max_rest, any::<u64>()).prop_map(|(shape, a, b, c, seed)| {
        let a = if shape == AShape::FiveCycleA { 5 } else { a };
        NgBlueprint::random(shape, a, b, c, seed)
    })
}

/// Checks the complement and uniqueness claims on one NG-graph.
fn check_complement(g: &Graph) {
    let cls = recognize_ng(g);
    assert!(cls.is_ng);
    let h = g.complement();
    let cls_h = recognize_ng(&h);
    assert!(cls_h.is_ng);
    assert_eq!(cls.has_type(NgType::One), cls_h.has_type(NgType::Two));
    assert_eq!(cls.has_type(NgType::Two), cls_h.has_type(NgType::One));
    assert_eq!(cls.has_type(NgType::Three), cls_h.has_type(NgType::Three));
    assert_eq!(cls.partition.unwrap().a, cls_h.partition.unwrap().a);
    assert_eq!(passing_candidates(g).len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn recognizer_agrees_with_oracle(g in arb_graph(1, 9)) {
        let cls = recognize_ng(&g);
        prop_assert_eq!(cls.is_ng, is_ng_oracle(&g).unwrap());
        if cls.is_ng {
            prop_assert_eq!(cls.k, Some(chromatic_number(&g).unwrap()));
        }
    }

    #[test]
    fn blueprints_build_ng_graphs(bp in arb_blueprint(5)) {
        let built = build_ng(&bp).unwrap();
        prop_assert!(built.classification.is_ng);
        prop_assert!(is_ng_oracle(&built.graph).unwrap());
        check_complement(&built.graph);
    }
}

#[test]
fn chromatic_number_of_ng_graphs_matches_brute_force() {
    for n in 1..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            let cls = recognize_ng(&g);
            if cls.is_ng {
                assert_eq!(cls.k, Some(brute_chromatic(&g)));
            }
        }
    }
}

#[test]
fn complements_of_ng_graphs() {
    for n in 1..=7 {
        for g in enumerate_graphs(n, true).unwrap().filter(|g| recognize_ng(g).is_ng) {
            check_complement(&g);
        }
    }
}

#[test]
fn high_degree_vertices_are_critical_only_in_the_graph() {
    for n in 1..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            let cls = recognize_ng(&g);
            let Some(k) = cls.k else { continue };
            let h = g.complement();
            for x in (0..n).filter(|&x| g.degree(x) + 1 > k) {
                assert!(is_color_critical(&g, x).unwrap());
                assert!(!is_color_critical(&h, x).unwrap());
            }
        }
    }
}

#[test]
fn clique_side_vertices_can_be_isolated_in_an_optimal_coloring() {
    for n in 1..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            let cls = recognize_ng(&g);
            if !cls.has_type(NgType::One) {
                continue;
            }
            let p = cls.partition.unwrap();
            let k = cls.k.unwrap();
            for x in p.a.union(p.b) {
                let c = coloring_isolating(&g, x, k).unwrap().expect("isolating coloring");
                assert!(c.is_proper(&g) && c.num_colors() <= k);
                assert_eq!(c.class(c.colors()[x]).len(), 1);
            }
        }
    }
}

#[test]
fn color_classes_of_optimal_distinguishing_colorings_of_ngd_graphs_are_ng() {
    for n in 1..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            let auts = automorphisms(&g).unwrap();
            if !nglab_core::ngd::is_ngd_oracle(&g).unwrap() {
                continue;
            }
            let d = distinguishing_number(&g, &auts).unwrap();
            for c in distinguishing_colorings(&g, &auts, d, false).unwrap() {
                for color in 1..=d {
                    let class = g.induced_subgraph(c.class(color)).unwrap();
                    assert!(recognize_ng(&class).is_ng, "class {color} of {c:?}");
                }
            }
        }
    }
}
