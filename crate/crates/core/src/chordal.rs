//! Diameter of chordal graphs: extremity rounds from a central vertex when
//! the radius is at least 3, and L-orderings with the ≺_N pruning when the
//! radius is 2.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{certify, small_diameter, DiameterResult, Stats};
use crate::error::{Error, Result};
use crate::extremities::next_extremity_with_order;
use crate::graph::{bfs_raw, bfs_tree, eccentricity_oracle, tree_path, Graph, VertexSet};
use crate::modular::{quotient_graph, QuotientKind};
use crate::partition::{Place, VertexPartition};
use crate::search::{is_simplicial, lexbfs, recognize_chordal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralVertex {
    pub c: usize,
    pub eccentricity: u32,
    /// The cheap candidates could not be certified and every eccentricity
    /// was computed.
    pub fallback: bool,
}

/// How many vertices on each side of the midpoint are tried.
const CENTER_WINDOW: usize = 2;

/// A vertex of minimum eccentricity. Candidates around the middle of a
/// LexBFS double sweep u, w are certified against rad ≥ ⌈e(w)/2⌉.
pub fn chordal_central_vertex(g: &Graph) -> Result<CentralVertex> {
    if recognize_chordal(g)?.is_none() {
        return Err(Error::NotChordal);
    }
    central_vertex_counted(g, &mut Stats::default())
}

fn central_vertex_counted(g: &Graph, stats: &mut Stats) -> Result<CentralVertex> {
    g.check_connected()?;
    if g.n() == 1 {
        return Ok(CentralVertex { c: 0, eccentricity: 0, fallback: false });
    }
    let u = lexbfs(g, 0)?.last();
    let w = lexbfs(g, u)?.last();
    let (dw, parent) = bfs_tree(g, w)?;
    for _ in 0..3 {
        stats.search(g);
    }
    let ew = dw.max_finite();
    let path = tree_path(&parent, u);
    let mid = path.len() / 2;
    let lo = mid.saturating_sub(CENTER_WINDOW);
    let hi = (mid + CENTER_WINDOW).min(path.len() - 1);
    let mut best = (u32::MAX, usize::MAX);
    for &x in &path[lo..=hi] {
        let e = *bfs_raw(g, &[x]).iter().max().unwrap();
        stats.search(g);
        best = best.min((e, x));
    }
    if best.0 == ew.div_ceil(2) {
        return Ok(CentralVertex { c: best.1, eccentricity: best.0, fallback: false });
    }
    let rep = eccentricity_oracle(g)?;
    stats.searches += g.n() as u64;
    stats.work += (g.n() * (g.n() + 2 * g.m())) as u64;
    Ok(CentralVertex { c: rep.center[0], eccentricity: rep.radius, fallback: true })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChordalBranch {
    /// Complete graph, at most two vertices, or a non-prime quotient.
    Degenerate,
    RadiusAtLeast3,
    /// Radius 2 and the LexBFS(c) last vertex has eccentricity 4.
    LexLast4,
    LexLast3,
    LOrdering,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalResult {
    pub diameter: DiameterResult,
    pub branch: ChordalBranch,
    pub center_fallback: bool,
    /// Extremity rounds only guarantee the diameter when it is at least 4.
    pub promise_violated: bool,
    pub extremities: Vec<usize>,
}

/// Extremity rounds from a central vertex; exact when diam(G) ≥ 4.
pub fn diameter_chordal_domtarget(g: &Graph) -> Result<ChordalResult> {
    if recognize_chordal(g)?.is_none() {
        return Err(Error::NotChordal);
    }
    g.check_connected()?;
    let mut stats = Stats::default();
    if g.n() <= 2 || g.is_complete() {
        return Ok(degenerate(g, stats));
    }
    let q = quotient_graph(g)?;
    stats.quotient_n = Some(q.quotient.n());
    stats.quotient_m = Some(q.quotient.m());
    if q.kind != QuotientKind::Prime {
        return Ok(ChordalResult { promise_violated: true, ..degenerate(g, stats) });
    }
    let qg = &q.quotient;
    let cv = central_vertex_counted(qg, &mut stats)?;
    let (value, pair, xs) = extremity_rounds(qg, cv.c, &mut stats)?;
    stats.search(qg);
    let pair = (q.representative[pair.0], q.representative[pair.1]);
    Ok(ChordalResult {
        diameter: certify(g, value, pair, stats),
        branch: ChordalBranch::RadiusAtLeast3,
        center_fallback: cv.fallback,
        promise_violated: value < 4,
        extremities: xs.into_iter().map(|x| q.representative[x]).collect(),
    })
}

fn degenerate(g: &Graph, stats: Stats) -> ChordalResult {
    let diameter = match g.n() {
        1 => certify(g, 0, (0, 0), stats),
        2 => certify(g, 1, (0, 1), stats),
        _ => small_diameter(g, stats),
    };
    ChordalResult {
        diameter,
        branch: ChordalBranch::Degenerate,
        center_fallback: false,
        promise_violated: false,
        extremities: Vec::new(),
    }
}

/// H = {c}; while H does not dominate, add an extremity x ∉ N[H], a
/// shortest c-x path and N(x). Returns max e(x_i) with a certificate.
fn extremity_rounds(g: &Graph, c: usize, stats: &mut Stats) -> Result<(u32, (usize, usize), Vec<usize>)> {
    let n = g.n();
    let ord = lexbfs(g, c)?;
    let (_, parent) = bfs_tree(g, c)?;
    stats.search(g);
    stats.search(g);
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
    let mut xs = Vec::new();
    let mut best = (0u32, (c, c));
    while covered.len() < n {
        let x = next_extremity_with_order(g, &ord, &covered)?;
        stats.extremities += 1;
        for v in tree_path(&parent, x) {
            add(&mut h, &mut covered, v);
        }
        for w in g.neighbors(x) {
            add(&mut h, &mut covered, w);
        }
        let d = bfs_raw(g, &[x]);
        stats.search(g);
        let far = (0..n).max_by_key(|&z| (d[z], std::cmp::Reverse(z))).unwrap();
        if d[far] > best.0 {
            best = (d[far], (x, far));
        }
        xs.push(x);
    }
    stats.rounds = xs.len() as u64;
    Ok((best.0, best.1, xs))
}

/// An ordering of S = V \ N[x1] by non-decreasing
/// L(v) = (ℓ(v), ℓ(u_1), …, ℓ(u_d)), where ℓ(v) = |N(v) ∩ C|, C = N(x1)
/// and u_1, …, u_d are the neighbors of v in S by non-increasing ℓ.
#[derive(Clone, Debug)]
pub struct LOrdering {
    pub x1: usize,
    pub clique: VertexSet,
    pub s: VertexSet,
    /// ℓ(v) for v ∈ S, 0 elsewhere.
    pub ell: Vec<u32>,
    pub order: Vec<usize>,
    /// Index of each S vertex in `order`; `usize::MAX` outside S.
    pub position: Vec<usize>,
}

impl LOrdering {
    /// L(v), materialized.
    pub fn l_value(&self, g: &Graph, v: usize) -> Vec<u32> {
        let mut nb: Vec<u32> = g.neighbors(v).filter(|&w| self.s.contains(w)).map(|w| self.ell[w]).collect();
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![self.ell[v]];
        out.extend(nb);
        out
    }
}

pub fn build_l_ordering(g: &Graph, x1: usize) -> Result<LOrdering> {
    g.check_vertex(x1)?;
    if !is_simplicial(g, x1) {
        return Err(Error::Precondition(format!("{x1} is not simplicial")));
    }
    let n = g.n();
    let clique = VertexSet::from_iter(n, g.neighbors(x1));
    let s = g.closed_neighborhood(x1).complement();
    let mut ell = vec![0u32; n];
    for v in s.iter() {
        ell[v] = g.neighbors(v).filter(|&w| clique.contains(w)).count() as u32;
        if ell[v] == 0 {
            return Err(Error::Precondition(format!("N({x1}) does not dominate {v}")));
        }
    }
    let maxl = s.iter().map(|v| ell[v]).max().unwrap_or(0) as usize;
    let mut by_ell: Vec<Vec<usize>> = vec![Vec::new(); maxl + 1];
    for v in s.iter() {
        by_ell[ell[v] as usize].push(v);
    }
    let mut part = VertexPartition::from_groups(n, by_ell.iter().cloned());
    let mut cnt = vec![0usize; n];
    for level in by_ell.iter().rev() {
        let mut hit = Vec::new();
        for &y in level {
            for v in g.neighbors(y) {
                if s.contains(v) {
                    if cnt[v] == 0 {
                        hit.push(v);
                    }
                    cnt[v] += 1;
                }
            }
        }
        // split each group by the number of neighbors at this level
        let mut j = 1;
        while !hit.is_empty() {
            part.refine(hit.iter().copied(), Place::After, None);
            j += 1;
            hit.retain(|&v| cnt[v] >= j);
        }
        for &y in level {
            for v in g.neighbors(y) {
                cnt[v] = 0;
            }
        }
    }
    let mut order = Vec::with_capacity(s.len());
    for mut grp in part.groups() {
        grp.sort_unstable();
        order.extend(grp);
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    Ok(LOrdering { x1, clique, s, ell, order, position })
}

/// Scans the ordering and drops every later neighbor of a kept vertex.
/// The result is an independent set listed in L-order.
pub fn reduce_to_independent(g: &Graph, ord: &LOrdering) -> Vec<usize> {
    let mut dropped = vec![false; g.n()];
    let mut out = Vec::new();
    for &x in &ord.order {
        if dropped[x] {
            continue;
        }
        out.push(x);
        for w in g.neighbors(x) {
            if ord.position[w] != usize::MAX && ord.position[w] > ord.position[x] {
                dropped[w] = true;
            }
        }
    }
    out
}

/// u ≺_N v: N(y) ∩ C ⊆ N(v) for every y ∈ N[u] ∩ S not adjacent to v.
pub fn prec_n_definitional(g: &Graph, ord: &LOrdering, u: usize, v: usize) -> bool {
    g.neighbors(u).chain([u]).filter(|&y| ord.s.contains(y) && !g.has_edge(y, v)).all(|y| {
        g.neighbors(y).filter(|&z| ord.clique.contains(z)).all(|z| g.has_edge(z, v))
    })
}

/// All v ∈ S* \ {u} with u ≺_N v, by the counter test.
pub fn prec_n_counter(g: &Graph, ord: &LOrdering, sstar: &VertexSet, u: usize) -> Vec<usize> {
    let mut gamma = vec![0u64; g.n()];
    prec_n_counter_with(g, ord, sstar, u, &mut gamma)
}

fn prec_n_counter_with(g: &Graph, ord: &LOrdering, sstar: &VertexSet, u: usize, gamma: &mut [u64]) -> Vec<usize> {
    let mut touched = Vec::new();
    let mut target = 0u64;
    for y in g.neighbors(u).chain([u]) {
        if !ord.s.contains(y) {
            continue;
        }
        target += ord.ell[y] as u64;
        for z in g.neighbors(y) {
            if ord.clique.contains(z) {
                gamma[z] += 1;
                touched.push(z);
            } else if y != u && z != u && sstar.contains(z) && ord.ell[z] < ord.ell[y] {
                gamma[z] += (ord.ell[y] - ord.ell[z]) as u64;
                touched.push(z);
            }
        }
    }
    let out = sstar
        .iter()
        .filter(|&v| v != u)
        .filter(|&v| {
            let big = gamma[v] + g.neighbors(v).filter(|&z| ord.clique.contains(z)).map(|z| gamma[z]).sum::<u64>();
            big == target
        })
        .collect();
    for z in touched {
        gamma[z] = 0;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecNFiltered {
    /// Vertices processed by the scan; all of them survive.
    pub processed: Vec<usize>,
}

/// Scans S* in L-order; each vertex not yet discarded discards the later
/// v with x ≺_N v.
pub fn prec_n_filter(g: &Graph, ord: &LOrdering, sstar: &[usize]) -> PrecNFiltered {
    let set = VertexSet::from_iter(g.n(), sstar.iter().copied());
    let mut gamma = vec![0u64; g.n()];
    let mut gone = vec![false; g.n()];
    let mut processed = Vec::new();
    for &x in sstar {
        if gone[x] {
            continue;
        }
        processed.push(x);
        for v in prec_n_counter_with(g, ord, &set, x, &mut gamma) {
            if ord.position[v] > ord.position[x] {
                gone[v] = true;
            }
        }
    }
    PrecNFiltered { processed }
}

/// Exact diameter of a connected chordal graph.
pub fn diameter_chordal(g: &Graph) -> Result<ChordalResult> {
    if recognize_chordal(g)?.is_none() {
        return Err(Error::NotChordal);
    }
    g.check_connected()?;
    let mut stats = Stats::default();
    stats.search(g);
    if g.n() <= 2 || g.is_complete() {
        return Ok(degenerate(g, stats));
    }
    let q = quotient_graph(g)?;
    stats.quotient_n = Some(q.quotient.n());
    stats.quotient_m = Some(q.quotient.m());
    if q.kind != QuotientKind::Prime {
        return Ok(degenerate(g, stats));
    }
    let qg = &q.quotient;
    let cv = central_vertex_counted(qg, &mut stats)?;
    let mut extremities = Vec::new();
    let (branch, value, pair) = if cv.eccentricity >= 3 {
        let (value, pair, xs) = extremity_rounds(qg, cv.c, &mut stats)?;
        extremities = xs;
        (ChordalBranch::RadiusAtLeast3, value, pair)
    } else {
        let x1 = lexbfs(qg, cv.c)?.last();
        let d = bfs_raw(qg, &[x1]);
        stats.search(qg);
        stats.search(qg);
        let far = (0..qg.n()).max_by_key(|&z| (d[z], std::cmp::Reverse(z))).unwrap();
        match d[far] {
            4 => (ChordalBranch::LexLast4, 4, (x1, far)),
            3 => (ChordalBranch::LexLast3, 3, (x1, far)),
            _ => {
                let ord = build_l_ordering(qg, x1)?;
                let sstar = reduce_to_independent(qg, &ord);
                let kept = prec_n_filter(qg, &ord, &sstar).processed;
                stats.rounds = kept.len() as u64;
                let best = kept
                    .par_iter()
                    .map(|&v| {
                        let d = bfs_raw(qg, &[v]);
                        let far = (0..qg.n()).max_by_key(|&z| (d[z], std::cmp::Reverse(z))).unwrap();
                        (d[far], std::cmp::Reverse(v), far)
                    })
                    .max();
                for _ in &kept {
                    stats.search(qg);
                }
                match best {
                    Some((e, std::cmp::Reverse(v), f)) if e > 2 => (ChordalBranch::LOrdering, e, (v, f)),
                    _ => (ChordalBranch::LOrdering, 2, (x1, far)),
                }
            }
        }
    };
    stats.search(qg);
    let pair = (q.representative[pair.0], q.representative[pair.1]);
    Ok(ChordalResult {
        diameter: certify(g, value, pair, stats),
        branch,
        center_fallback: cv.fallback,
        promise_violated: false,
        extremities: extremities.into_iter().map(|x| q.representative[x]).collect(),
    })
}
