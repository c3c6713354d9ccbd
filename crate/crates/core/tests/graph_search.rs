mod common;

use common::{arb_graph, bfs_ref, components_ref, random_connected};
use extremal_diam::graph::{bfs, components_after_removing, multi_source_bfs};
use extremal_diam::search::{is_peo, label, lexbfs, lexbfs_counted, recognize_chordal, verify_lexorder};
use extremal_diam::{Graph, VertexSet};
use proptest::prelude::*;

/// LexBFS with explicit labels: repeatedly number the unnumbered vertex of
/// largest label, smallest id first among equals.
fn lexbfs_labels(g: &Graph, start: usize) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::new();
    for i in (1..=n).rev() {
        let x = if i == n {
            start
        } else {
            (0..n).filter(|&v| !done[v]).fold(None, |best: Option<usize>, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .unwrap()
        };
        done[x] = true;
        order.push(x);
        for w in g.neighbors(x) {
            if !done[w] {
                labels[w].push(i);
            }
        }
    }
    order
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bfs_matches_queue_reference(g in arb_graph(40), s in any::<prop::sample::Index>()) {
        let s = s.index(g.n());
        let d = bfs(&g, s).unwrap();
        prop_assert_eq!(d.raw(), &bfs_ref(&g, s)[..]);
    }

    #[test]
    fn triangle_inequality(g in arb_graph(40), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let (u, v, w) = (a.index(g.n()), b.index(g.n()), c.index(g.n()));
        let (du, dv) = (bfs(&g, u).unwrap(), bfs(&g, v).unwrap());
        prop_assert!(du.at(w) <= du.at(v) + dv.at(w));
    }

    #[test]
    fn multi_source_is_min_over_sources(g in arb_graph(30), pick in prop::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        let srcs: Vec<usize> = pick.iter().map(|i| i.index(g.n())).collect();
        let d = multi_source_bfs(&g, &VertexSet::from_iter(g.n(), srcs.iter().copied())).unwrap();
        for v in 0..g.n() {
            let want = srcs.iter().map(|&s| bfs_ref(&g, s)[v]).min().unwrap();
            prop_assert_eq!(d.at(v), want);
        }
    }

    #[test]
    fn components_match_reference(g in arb_graph(30), pick in prop::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        let n = g.n();
        let removed = VertexSet::from_iter(n, pick.iter().map(|i| i.index(n)));
        let comps = components_after_removing(&g, &removed);
        let mask: Vec<bool> = (0..n).map(|v| removed.contains(v)).collect();
        let (label, count) = components_ref(&g, &mask);
        prop_assert_eq!(comps.len(), count as usize);
        for c in &comps {
            let first = c.min().unwrap();
            prop_assert!(c.iter().all(|v| label[v] == label[first]));
        }
        if removed.is_empty() {
            prop_assert_eq!(comps.len(), 1);
            prop_assert_eq!(comps[0].len(), n);
        }
    }

    #[test]
    fn lexbfs_matches_label_replay(g in arb_graph(25), s in any::<prop::sample::Index>()) {
        let s = s.index(g.n());
        let ord = lexbfs(&g, s).unwrap();
        prop_assert_eq!(ord.visit_order(), &lexbfs_labels(&g, s)[..]);
        prop_assert!(verify_lexorder(&g, &ord));
    }

    #[test]
    fn lexbfs_is_a_bfs_layering(g in arb_graph(40), s in any::<prop::sample::Index>()) {
        let s = s.index(g.n());
        let ord = lexbfs(&g, s).unwrap();
        let d = bfs_ref(&g, s);
        for i in 1..g.n() {
            prop_assert!(d[ord.sigma(i)] >= d[ord.sigma(i + 1)]);
        }
    }

    #[test]
    fn monotonicity(g in arb_graph(14), s in any::<prop::sample::Index>()) {
        let n = g.n();
        let ord = lexbfs(&g, s.index(n)).unwrap();
        // a ⪯ c means number(a) ≤ number(c)
        let num = |v: usize| ord.number(v);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if num(a) > num(c) || num(b) > num(c) {
                        continue;
                    }
                    for d in (0..n).filter(|&d| num(c) < num(d)) {
                        if label(&g, &ord, a, d) < label(&g, &ord, b, d) {
                            prop_assert!(label(&g, &ord, a, c) < label(&g, &ord, b, c));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in (0..n).filter(|&y| num(x) <= num(y)) {
                for z in (0..n).filter(|&z| num(y) <= num(z)) {
                    if label(&g, &ord, x, z) == label(&g, &ord, z, z) {
                        prop_assert_eq!(label(&g, &ord, y, z), label(&g, &ord, z, z));
                    }
                }
            }
        }
    }

    #[test]
    fn chordality_matches_simplicial_elimination(g in arb_graph(16)) {
        let rec = recognize_chordal(&g).unwrap();
        prop_assert_eq!(rec.is_some(), common::is_chordal_ref(&g));
        if let Some(ord) = rec {
            prop_assert!(is_peo(&g, &ord));
        }
    }
}

#[test]
fn lexbfs_work_is_linear() {
    let mut worst: f64 = 0.0;
    for (i, n) in [50, 200, 1000, 3000].into_iter().enumerate() {
        for p in [0, 1, 5] {
            let g = random_connected(n, p, i as u64 * 7 + p);
            let (_, work) = lexbfs_counted(&g, 0).unwrap();
            worst = worst.max(work as f64 / (g.n() + g.m()) as f64);
        }
    }
    assert!(worst <= 3.0, "work/(n+m) reached {worst}");
}
