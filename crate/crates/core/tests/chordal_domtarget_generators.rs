mod common;

use common::{apsp, eccentricities, is_chordal_ref};
use extremal_diam::chordal::{
    build_l_ordering, chordal_central_vertex, diameter_chordal, prec_n_counter, prec_n_definitional,
    reduce_to_independent,
};
use extremal_diam::domtarget::diameter_dominating_target;
use extremal_diam::extremities::{asteroidal_number_oracle, is_dominating_target, Verdict};
use extremal_diam::generators::{generate, generate_connected, Family, GenSpec};
use extremal_diam::modular::is_prime;
use extremal_diam::search::lexbfs;
use extremal_diam::{Graph, VertexSet};
use proptest::prelude::*;

fn chordal_graph() -> impl Strategy<Value = Graph> {
    let interval = (3usize..60, 1.0f64..8.0, any::<u64>())
        .prop_map(|(n, d, s)| generate_connected(&GenSpec::new(Family::Interval, n, 0, d, s)).unwrap());
    let leafage = (6usize..60, 2usize..6, 1.0f64..3.0, any::<u64>())
        .prop_map(|(n, k, d, s)| generate_connected(&GenSpec::new(Family::ChordalLeafage, n, k, d, s)).unwrap());
    let split = (4usize..40, 0.0f64..0.6, any::<u64>())
        .prop_map(|(n, d, s)| generate_connected(&GenSpec::new(Family::Split, n, 0, d, s)).unwrap());
    prop_oneof![interval, leafage, split]
}

fn split_graph() -> impl Strategy<Value = Graph> {
    (6usize..40, 0.0f64..0.5, any::<u64>())
        .prop_map(|(n, d, s)| generate_connected(&GenSpec::new(Family::Split, n, 0, d, s)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn chordal_diameter_and_center(g in chordal_graph()) {
        prop_assert!(is_chordal_ref(&g));
        let ecc = eccentricities(&apsp(&g));
        let r = diameter_chordal(&g).unwrap();
        prop_assert_eq!(r.diameter.value, *ecc.iter().max().unwrap());
        let c = chordal_central_vertex(&g).unwrap();
        prop_assert_eq!(c.eccentricity, *ecc.iter().min().unwrap());
        prop_assert_eq!(ecc[c.c], c.eccentricity);
    }

}

proptest! {
    #![proptest_config(ProptestConfig { cases: 60, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn prec_n_counter_matches_definition(g in split_graph()) {
        prop_assume!(g.n() >= 3 && is_prime(&g).prime);
        let c = chordal_central_vertex(&g).unwrap();
        prop_assume!(c.eccentricity == 2);
        let x1 = lexbfs(&g, c.c).unwrap().last();
        prop_assume!(*common::bfs_ref(&g, x1).iter().max().unwrap() == 2);
        let ord = build_l_ordering(&g, x1).unwrap();
        let sstar = reduce_to_independent(&g, &ord);
        prop_assert!(sstar.iter().all(|&a| sstar.iter().all(|&b| !g.has_edge(a, b))));
        let set = VertexSet::from_iter(g.n(), sstar.iter().copied());
        for &u in &sstar {
            let mut got = prec_n_counter(&g, &ord, &set, u);
            got.sort_unstable();
            let mut want: Vec<usize> = sstar.iter().copied().filter(|&v| v != u && prec_n_definitional(&g, &ord, u, v)).collect();
            want.sort_unstable();
            prop_assert_eq!(got, want);
        }
    }

}

proptest! {
    #[test]
    fn generators_are_deterministic(fam in 0usize..9, n in 4usize..80, k in 2usize..6, d in 0.05f64..0.9, seed in any::<u64>()) {
        let family = Family::ALL[fam];
        let spec = GenSpec::new(family, n, k, d, seed);
        let back: GenSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(back.to_string(), spec.to_string());
        match (generate(&spec), generate(&spec)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
        }
    }
}

fn asteroidal(g: &Graph) -> usize {
    asteroidal_number_oracle(g).unwrap().len()
}

#[test]
fn generator_class_guarantees() {
    for seed in 1..=6 {
        for n in [12, 25, 40] {
            let g = generate(&GenSpec::new(Family::Interval, n, 0, 3.0, seed)).unwrap();
            assert!(is_chordal_ref(&g));
            let g = g.largest_component().0;
            assert!(asteroidal(&g) <= 2);
            let g = generate_connected(&GenSpec::new(Family::Permutation, n, 0, 0.0, seed)).unwrap();
            assert!(asteroidal(&g) <= 2);
            let g = generate_connected(&GenSpec::new(Family::Permutation, n, 0, 2.0, seed)).unwrap();
            assert!(asteroidal(&g) <= 2);
            for k in [3, 4, 5] {
                let g = generate_connected(&GenSpec::new(Family::KPolygon, n, k, 0.0, seed)).unwrap();
                assert!(asteroidal(&g) <= k, "k-polygon n={n} k={k} seed={seed}");
                let g = generate(&GenSpec::new(Family::ChordalLeafage, n, k, 1.5, seed)).unwrap();
                assert!(is_chordal_ref(&g));
                assert!(asteroidal(&g.largest_component().0) <= k);
            }
            let g = generate(&GenSpec::new(Family::Split, n, 0, 0.3, seed)).unwrap();
            assert!(is_chordal_ref(&g));
            let g = generate(&GenSpec::new(Family::GnpPrime, n, 0, 0.2, seed)).unwrap();
            assert!(g.is_connected() && is_prime(&g).prime);
            let g = generate(&GenSpec::new(Family::DomEdge, n, 0, 0.5, seed)).unwrap();
            assert_eq!(is_dominating_target(&g, &VertexSet::from_iter(n, [0, 1])), Verdict::True);
            let g = generate(&GenSpec::new(Family::Caterpillar, n, 0, 0.4, seed)).unwrap();
            assert!(is_chordal_ref(&g) && g.is_connected());
        }
    }
    for legs in 3..=5 {
        let g = generate(&GenSpec::new(Family::Spider, legs, 2, 0.0, 0)).unwrap();
        assert_eq!(asteroidal(&g), legs);
    }
}

/// Graphs with a dominating target of known size k.
fn known_targets() -> Vec<(String, Graph, u32)> {
    let mut out = Vec::new();
    for legs in 3..=6 {
        for len in 1..=8 {
            let g = generate(&GenSpec::new(Family::Spider, legs, len, 0.0, 0)).unwrap();
            out.push((format!("spider {legs}x{len}"), g, legs as u32));
        }
    }
    for n in [20, 100, 500, 2000] {
        for seed in 1..=4 {
            let spec = GenSpec::new(Family::DomEdge, n, 0, 1.0, seed);
            out.push((spec.to_string(), generate_connected(&spec).unwrap(), 2));
        }
    }
    out
}

#[test]
fn domtarget_rounds_are_disjoint_and_cover_is_small() {
    for (name, g, k) in known_targets() {
        let ecc = eccentricities(&apsp(&g));
        let r = diameter_dominating_target(&g, Some(k)).unwrap();
        assert_eq!(r.diameter.value, *ecc.iter().max().unwrap(), "{name}");
        assert!(!r.promise_violated, "{name}");
        let xs = &r.extremities;
        for (i, &a) in xs.iter().enumerate() {
            for &b in &xs[i + 1..] {
                let na = g.closed_neighborhood(a);
                assert!(!na.intersects(&g.closed_neighborhood(b)), "{name}: rounds {a} and {b} overlap");
            }
        }
        let bound = 2.0 * k as f64 * ((g.n() as f64).ln() + 1.0);
        assert!(r.cover_size as f64 <= bound, "{name}: cover {} above {bound}", r.cover_size);
    }
}
