//! Randomized structural properties: serialization round-trips, labeling
//! invariance, and the index identities that must hold on every graph.

use proptest::prelude::*;

use harmonic::{
    canonical_form, first_zagreb, harmonic_index, parse_graph6, random_connected_graph,
    to_graph6, tree_extremal_values, Graph, Rational, Seed,
};

/// A graph on up to `max_n` vertices with an arbitrary edge subset.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), len))
        })
        .prop_map(|(n, pairs, keep)| {
            let edges = pairs
                .into_iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).expect("distinct pairs")
        })
}

/// A graph together with a permutation of its vertices.
fn arb_graph_and_relabeling(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(16)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn harmonic_index_is_isomorphism_invariant((g, perm) in arb_graph_and_relabeling(9)) {
        prop_assert_eq!(harmonic_index(&g.relabel(&perm)), harmonic_index(&g));
    }

    #[test]
    fn harmonic_index_adds_over_components(a in arb_graph(7), b in arb_graph(7)) {
        let shift = a.n();
        let union = Graph::from_edges(
            a.n() + b.n(),
            a.edges().chain(b.edges().map(|(u, v)| (u + shift, v + shift))),
        )
        .unwrap();
        prop_assert_eq!(harmonic_index(&union), harmonic_index(&a) + harmonic_index(&b));
    }

    #[test]
    fn harmonic_index_equals_edge_count_only_on_perfect_matchings(g in arb_graph(9)) {
        let all_edges_isolated = g
            .edges()
            .all(|(u, v)| g.degree(u) == 1 && g.degree(v) == 1);
        prop_assert_eq!(
            harmonic_index(&g) == Rational::from_integer(g.m() as i64),
            all_edges_isolated
        );
    }

    #[test]
    fn first_zagreb_equals_the_edge_degree_sums(g in arb_graph(9)) {
        let edge_sum: u64 = g.edges().map(|(u, v)| (g.degree(u) + g.degree(v)) as u64).sum();
        prop_assert_eq!(first_zagreb(&g), edge_sum);
    }

    #[test]
    fn random_trees_stay_inside_the_extremal_envelope(
        n in 3usize..=12,
        seed in any::<u64>(),
    ) {
        let t = random_connected_graph(n, n - 1, Seed(seed)).unwrap();
        prop_assert!(t.is_tree());
        let h = harmonic_index(&t);
        let (min, max) = tree_extremal_values(n).unwrap();
        prop_assert!(h >= min && h <= max, "H = {} outside [{}, {}]", h.exact(), min.exact(), max.exact());
    }
}

proptest! {
    // labeling invariance of the canonical form is the keystone the
    // enumeration cross-checks stand on, so it gets a larger sample
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn canonical_form_is_labeling_invariant((g, perm) in arb_graph_and_relabeling(8)) {
        prop_assert_eq!(
            canonical_form(&g.relabel(&perm)).unwrap(),
            canonical_form(&g).unwrap()
        );
    }
}
