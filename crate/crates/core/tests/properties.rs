//! Property tests over randomly generated trees and fractions.

use proptest::prelude::*;
use resgraph::quotient::{branch_fraction, fraction_to_branch};
use resgraph::{classify, dsl, engine, Cycle, WeightedDualGraph};

fn tree(max_n: usize, weights: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = WeightedDualGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            (
                prop::collection::vec(weights.clone(), n),
                prop::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            )
        })
        .prop_map(|(w, parents)| {
            let edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            WeightedDualGraph::from_weights(&w, &edges).unwrap()
        })
}

fn tree_with_order(max_n: usize) -> impl Strategy<Value = (WeightedDualGraph, Vec<usize>)> {
    tree(max_n, 2..=5).prop_flat_map(|g| {
        let order: Vec<usize> = (0..g.len()).collect();
        (Just(g), Just(order).prop_shuffle())
    })
}

fn cycles(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..6, n)
}

proptest! {
    #[test]
    fn weights_round_trip_through_fractions(w in prop::collection::vec(2i64..=7, 1..=7)) {
        let f = branch_fraction(&w).unwrap();
        prop_assert!(0 < f.p && f.p < f.q);
        prop_assert_eq!(fraction_to_branch(f.q, f.p).unwrap(), w);
    }

    #[test]
    fn fractions_round_trip_through_weights(q in 2i64..400, p in 1i64..400) {
        prop_assume!(p < q && num_integer::gcd(p, q) == 1);
        let w = fraction_to_branch(q, p).unwrap();
        prop_assert!(w.iter().all(|&b| b >= 2));
        let f = branch_fraction(&w).unwrap();
        prop_assert_eq!((f.q, f.p), (q, p));
    }

    #[test]
    fn pairing_is_symmetric_and_bilinear(
        (g, a, b, c) in tree(8, 1..=5).prop_flat_map(|g| {
            let n = g.len();
            (Just(g), cycles(n), cycles(n), cycles(n))
        })
    ) {
        let m = g.intersection_form();
        let (a, b, c) = (Cycle::new(a), Cycle::new(b), Cycle::new(c));
        let ab = &a + &b;
        prop_assert_eq!(m.pair(&a, &b).unwrap(), m.pair(&b, &a).unwrap());
        prop_assert_eq!(m.pair(&ab, &c).unwrap(), m.pair(&a, &c).unwrap() + m.pair(&b, &c).unwrap());
        prop_assert_eq!(engine::pair(&g, &a, &b), m.pair(&a, &b).unwrap());
    }

    #[test]
    fn chi_is_additive_up_to_the_pairing(
        (g, a, b) in tree(8, 2..=5).prop_flat_map(|g| {
            let n = g.len();
            (Just(g), cycles(n), cycles(n))
        })
    ) {
        let (a, b) = (Cycle::new(a), Cycle::new(b));
        let sum = engine::chi(&g, &(&a + &b)).unwrap();
        prop_assert_eq!(sum, engine::chi(&g, &a).unwrap() + engine::chi(&g, &b).unwrap() - engine::pair(&g, &a, &b));
    }

    #[test]
    fn dsl_round_trip(g in tree(9, 1..=6)) {
        let h = dsl::parse_graph(&dsl::emit(&g)).unwrap();
        prop_assert_eq!(h.weights(), g.weights());
        prop_assert_eq!(h.edges(), g.edges());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// The computation sequence depends on vertex order; its result does not.
    #[test]
    fn results_do_not_depend_on_vertex_order((g, order) in tree_with_order(9)) {
        prop_assume!(g.intersection_form().is_negative_definite());
        let h = g.reordered(&order);
        let (zg, _) = engine::fundamental_cycle(&g).unwrap();
        let (zh, _) = engine::fundamental_cycle(&h).unwrap();
        prop_assert_eq!(&zh, &zg.reordered(&order));
        let rg = engine::rationality(&g).unwrap();
        let rh = engine::rationality(&h).unwrap();
        prop_assert_eq!(rg.p_f, rh.p_f);
        if rg.is_rational {
            let fg = engine::trace_cycle(&g).unwrap();
            prop_assert_eq!(engine::trace_cycle(&h).unwrap(), fg.reordered(&order));
            let ng = classify::nearly_gorenstein(&g).unwrap();
            let nh = classify::nearly_gorenstein(&h).unwrap();
            prop_assert_eq!(ng.nearly_gorenstein, nh.nearly_gorenstein);
            prop_assert_eq!(ng.structural.case, nh.structural.case);
            prop_assert_eq!(ng.trace_colength, nh.trace_colength);
        }
    }

    #[test]
    fn rational_invariants((g, _) in tree_with_order(9)) {
        prop_assume!(g.intersection_form().is_negative_definite());
        let r = engine::rationality(&g).unwrap();
        prop_assume!(r.is_rational);
        let (z, _) = engine::fundamental_cycle(&g).unwrap();
        let e = engine::multiplicity(&g).unwrap();
        prop_assert!(e >= 2);
        prop_assert_eq!(e, 2 + engine::canonical_degree(&g, &z));
        prop_assert_eq!(engine::chi(&g, &z).unwrap(), 1);
        let f = engine::trace_cycle(&g).unwrap();
        prop_assert!(engine::is_anti_nef(&g, &f));
        prop_assert!(f.is_zero() || z.le(&f));
        prop_assert!(engine::colength(&g, &f).unwrap() >= 0);
    }
}
