mod common;

use proptest::prelude::*;
use tihany::solvers::{
    chromatic_number, clique_number, find_coloring, greedy_dsatur, matching_number, maximum_matching,
    stability_number,
};
use tihany::{decode_graph6, encode_graph6, Budget, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn chromatic_matches_partition_count(g in graph(9)) {
        let (chi, col) = chromatic_number(&g, Budget::unlimited()).unwrap();
        prop_assert_eq!(chi, common::chromatic(&g));
        prop_assert!(col.is_proper(&g));
        prop_assert_eq!(col.k(), chi);
    }

    #[test]
    fn one_color_fewer_is_infeasible(g in graph(8)) {
        let chi = common::chromatic(&g);
        prop_assert!(find_coloring(&g, chi, Budget::unlimited()).unwrap().is_some());
        if chi > 0 {
            prop_assert!(find_coloring(&g, chi - 1, Budget::unlimited()).unwrap().is_none());
        }
    }

    #[test]
    fn clique_and_stable_numbers(g in graph(10)) {
        let (w, k) = clique_number(&g);
        prop_assert_eq!(w, common::clique_number(&g));
        prop_assert!(g.is_clique(&k) && k.len() == w);
        let (a, s) = stability_number(&g);
        prop_assert_eq!(a, common::stability_number(&g));
        prop_assert!(g.is_stable(&s) && s.len() == a);
    }

    #[test]
    fn matching_number_matches_enumeration(g in graph(12)) {
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid(&g));
        prop_assert_eq!(m.len(), common::matchings(&g).0);
        prop_assert_eq!(matching_number(&g), m.len());
    }

    #[test]
    fn dsatur_is_proper_upper_bound(g in graph(12)) {
        let c = greedy_dsatur(&g);
        prop_assert!(c.is_proper(&g));
        prop_assert!(c.k() >= clique_number(&g).0);
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
}
