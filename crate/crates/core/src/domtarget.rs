//! Diameter of graphs with a small dominating target and bounded degree:
//! extremity rounds that take whole neighborhoods, then a greedy cover of V
//! by path neighborhoods and vertex neighborhoods.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{certify, local_max_ecc_counted, small_diameter, DiameterResult, Stats};
use crate::error::{Error, Result};
use crate::extremities::next_extremity_with_order;
use crate::graph::{bfs_raw, bfs_tree, tree_path, Graph, VertexSet};
use crate::hyperbolicity::delta_star_counted;
use crate::modular::{quotient_graph, QuotientKind};
use crate::search::{double_sweep, lexbfs};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomTargetResult {
    pub diameter: DiameterResult,
    /// Extremities x_1..x_t, in input labels.
    pub extremities: Vec<usize>,
    /// |X|: vertices whose path to the center was computed.
    pub candidates: usize,
    pub cover_size: usize,
    pub path_picks: usize,
    pub vertex_picks: usize,
    /// More rounds than `k_hint`, so no dominating target of that size exists.
    pub promise_violated: bool,
}

pub fn diameter_dominating_target(g: &Graph, k_hint: Option<u32>) -> Result<DomTargetResult> {
    g.check_connected()?;
    if k_hint == Some(0) {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let trivial = |diameter| DomTargetResult {
        diameter,
        extremities: Vec::new(),
        candidates: 0,
        cover_size: 0,
        path_picks: 0,
        vertex_picks: 0,
        promise_violated: false,
    };
    let mut stats = Stats::default();
    match g.n() {
        1 => return Ok(trivial(certify(g, 0, (0, 0), stats))),
        2 => return Ok(trivial(certify(g, 1, (0, 1), stats))),
        _ => {}
    }
    let q = quotient_graph(g)?;
    stats.quotient_n = Some(q.quotient.n());
    stats.quotient_m = Some(q.quotient.m());
    if q.kind != QuotientKind::Prime {
        return Ok(trivial(small_diameter(g, stats)));
    }
    let qg = &q.quotient;
    let mut r = prime_case(qg, k_hint, &mut stats)?;
    stats.search(qg);
    let pair = (q.representative[r.pair.0], q.representative[r.pair.1]);
    r.out.extremities = r.out.extremities.iter().map(|&x| q.representative[x]).collect();
    r.out.diameter = certify(g, r.value, pair, stats);
    Ok(r.out)
}

struct PrimeOutcome {
    value: u32,
    pair: (usize, usize),
    out: DomTargetResult,
}

fn prime_case(g: &Graph, k_hint: Option<u32>, stats: &mut Stats) -> Result<PrimeOutcome> {
    let n = g.n();
    let c = double_sweep(g)?.c;
    for _ in 0..3 {
        stats.search(g);
    }
    let ord = lexbfs(g, c)?;
    let (dc, parent) = bfs_tree(g, c)?;
    stats.search(g);
    stats.search(g);

    // rounds: every y ∈ N[x_i] joins X, with its path to c added to H
    let mut h = VertexSet::new(n);
    let mut covered = VertexSet::new(n);
    let add = |h: &mut VertexSet, covered: &mut VertexSet, v: usize| {
        if h.insert(v) {
            covered.insert(v);
            for w in g.neighbors(v) {
                covered.insert(w);
            }
        }
    };
    add(&mut h, &mut covered, c);
    let mut in_x = VertexSet::new(n);
    let mut xs_list: Vec<usize> = Vec::new();
    let mut extremities = Vec::new();
    while covered.len() < n {
        let x = next_extremity_with_order(g, &ord, &covered)?;
        stats.extremities += 1;
        extremities.push(x);
        for y in g.neighbors(x).chain([x]) {
            if in_x.insert(y) {
                xs_list.push(y);
            }
            for v in tree_path(&parent, y) {
                add(&mut h, &mut covered, v);
            }
        }
    }
    stats.rounds = extremities.len() as u64;
    let paths: Vec<Vec<usize>> = xs_list.iter().map(|&y| tree_path(&parent, y)).collect();

    // greedy cover; vertex neighborhoods are scored by counters
    let mut path_sets: Vec<Vec<usize>> = Vec::with_capacity(paths.len());
    let mut sets_of: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (i, p) in paths.iter().enumerate() {
        let mut s = VertexSet::new(n);
        for &v in p {
            s.insert(v);
            for w in g.neighbors(v) {
                s.insert(w);
            }
        }
        let s = s.to_vec();
        for &v in &s {
            sets_of[v].push(i as u32);
        }
        path_sets.push(s);
    }
    let mut path_gain: Vec<usize> = path_sets.iter().map(|s| s.len()).collect();
    let mut vertex_gain: Vec<usize> = (0..n).map(|v| g.degree(v) + 1).collect();
    let mut uncovered = VertexSet::full(n);
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut cover_size = 0;
    while !uncovered.is_empty() {
        let bp = (0..path_gain.len()).max_by_key(|&i| (path_gain[i], std::cmp::Reverse(i)));
        let bv = (0..n).max_by_key(|&v| (vertex_gain[v], std::cmp::Reverse(v))).unwrap();
        let members: Vec<usize> = match bp {
            Some(i) if path_gain[i] >= vertex_gain[bv] => {
                a.push(i);
                path_sets[i].clone()
            }
            _ => {
                b.push(bv);
                g.neighbors(bv).chain([bv]).collect()
            }
        };
        cover_size += 1;
        for v in members {
            if uncovered.remove(v) {
                for &i in &sets_of[v] {
                    path_gain[i as usize] -= 1;
                }
                for w in g.neighbors(v).chain([v]) {
                    vertex_gain[w] -= 1;
                }
            }
        }
    }
    let a_set: Vec<usize> = a.iter().map(|&i| xs_list[i]).collect();
    b.retain(|v| !a_set.contains(v));

    let cutoff = match k_hint {
        Some(k) => (42 * k as u64).saturating_sub(11).max(1),
        None => {
            // the union of all paths dominates, as Δ* requires
            let ds = delta_star_counted(g, c, &paths, stats)?;
            stats.delta_star = Some(ds.value);
            14 * ds.value as u64 + 3
        }
    };
    stats.cutoff = Some(cutoff);
    let mut seen = VertexSet::new(n);
    let mut w_all = Vec::new();
    for &i in &a {
        let x = xs_list[i];
        let take = ((dc.at(x) + 1) as u64).min(cutoff) as usize;
        for &w in &paths[i][..take] {
            if seen.insert(w) {
                w_all.push(w);
            }
        }
    }
    let mut seen = VertexSet::new(n);
    let mut direct = Vec::new();
    for &v in &b {
        for w in g.neighbors(v).chain([v]) {
            if seen.insert(w) {
                direct.push(w);
            }
        }
    }
    let locals: Vec<Result<(u32, (usize, usize), Stats)>> = w_all
        .par_iter()
        .map(|&w| {
            let mut s = Stats::default();
            local_max_ecc_counted(g, w, &mut s).map(|l| (l.value, (l.witness, l.far), s))
        })
        .collect();
    let mut best = (0u32, (c, c));
    for r in locals {
        let (value, pair, s) = r?;
        stats.absorb(&s);
        if value > best.0 {
            best = (value, pair);
        }
    }
    let directs: Vec<(u32, usize, usize)> = direct
        .par_iter()
        .map(|&w| {
            let d = bfs_raw(g, &[w]);
            let far = (0..n).max_by_key(|&z| (d[z], std::cmp::Reverse(z))).unwrap();
            (d[far], w, far)
        })
        .collect();
    for (e, w, far) in directs {
        stats.search(g);
        if e > best.0 {
            best = (e, (w, far));
        }
    }
    let promise_violated = k_hint.is_some_and(|k| extremities.len() > k as usize);
    Ok(PrimeOutcome {
        value: best.0,
        pair: best.1,
        out: DomTargetResult {
            diameter: DiameterResult {
                value: best.0,
                certificate: best.1,
                certificate_verified: false,
                stats: Stats::default(),
            },
            extremities,
            candidates: xs_list.len(),
            cover_size,
            path_picks: a.len(),
            vertex_picks: b.len(),
            promise_violated,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn examples() {
        for (g, d) in [(path(5), 4), (spider3(), 4), (petersen(), 2), (star(3), 2)] {
            for k in [None, Some(3)] {
                let r = diameter_dominating_target(&g, k).unwrap();
                assert_eq!(r.diameter.value, d);
                assert!(r.diameter.certificate_verified);
            }
        }
        // two adjacent hubs 0, 1 covering pendant paths of length 1
        let mut edges = vec![(0, 1)];
        for v in 2..12 {
            edges.push((v % 2, v));
        }
        edges.push((2, 3));
        let g = Graph::from_edges(12, &edges).unwrap();
        let r = diameter_dominating_target(&g, Some(2)).unwrap();
        assert_eq!(r.diameter.value, crate::graph::eccentricity_oracle(&g).unwrap().diameter);
    }

    #[test]
    fn promise_flag() {
        let r = diameter_dominating_target(&spider(6, 2), Some(1)).unwrap();
        assert!(r.promise_violated);
        assert_eq!(r.diameter.value, 4);
        assert!(diameter_dominating_target(&path(4), Some(0)).is_err());
    }
}
