mod common;

use common::{arb_graph, brute_automorphisms, brute_isomorphic};
use nglab_core::enumerate::{
    are_isomorphic, canonical_form, enumerate_graphs, graph_from_mask, labeled_graph_count,
};
use nglab_core::graph6::{emit_graph6, parse_graph6};
use nglab_core::oracle::automorphisms;
use proptest::prelude::*;

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(0, 12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn degrees_in_graph_and_complement_sum_to_n_minus_one(g in arb_graph(1, 12)) {
        let h = g.complement();
        for v in 0..g.n() {
            prop_assert_eq!(g.degree(v) + h.degree(v), g.n() - 1);
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(0, 64)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabelling_invariant(g in arb_graph(1, 8), seed in any::<u64>()) {
        // a permutation derived from the seed by sorting keyed positions
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&v| (seed.rotate_left(7 * v as u32) ^ v as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn automorphisms_match_brute_force(g in arb_graph(0, 6)) {
        let mut expected = brute_automorphisms(&g);
        expected.sort();
        prop_assert_eq!(automorphisms(&g).unwrap().to_vecs(), expected);
    }
}

#[test]
fn graph6_round_trip_on_every_labeled_graph_up_to_six() {
    for n in 0..=6 {
        for mask in 0..labeled_graph_count(n).unwrap() {
            let g = graph_from_mask(n, mask).unwrap();
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn dedup_enumeration_is_pairwise_non_isomorphic() {
    for n in 0..=5 {
        let reps: Vec<_> = enumerate_graphs(n, true).unwrap().collect();
        for (i, g) in reps.iter().enumerate() {
            for h in &reps[..i] {
                assert!(!brute_isomorphic(g, h), "n = {n}: duplicate class");
            }
        }
    }
}

#[test]
fn dedup_enumeration_covers_every_labeled_graph() {
    for n in 0..=5 {
        let reps: Vec<_> = enumerate_graphs(n, true).unwrap().collect();
        for mask in 0..labeled_graph_count(n).unwrap() {
            let g = graph_from_mask(n, mask).unwrap();
            assert!(reps.iter().any(|h| brute_isomorphic(&g, h)), "n = {n}: mask {mask} uncovered");
        }
    }
}

#[test]
fn known_class_counts() {
    for (n, count) in [1usize, 1, 2, 4, 11, 34, 156, 1044].into_iter().enumerate() {
        assert_eq!(enumerate_graphs(n, true).unwrap().count(), count, "n = {n}");
    }
}
