//! Approximate eccentricities and exact diameter from a dominating system
//! of shortest paths between a central vertex and extremities.

mod local;

pub use local::{build_clean_set, build_discard_set, local_max_ecc, LocalEcc};
pub(crate) use local::local_max_ecc_counted;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremities::next_extremity_with_order;
use crate::graph::{bfs_raw, bfs_tree, tree_path, DistanceVector, Graph, VertexSet};
use crate::hyperbolicity::delta_star_counted;
use crate::modular::{lift_eccentricities, quotient_graph, QuotientKind};
use crate::search::{double_sweep, lexbfs, DoubleSweep};

/// Work counters. A "search" is one full-graph BFS, multi-source BFS or
/// LexBFS; `work` adds n + 2m per search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub searches: u64,
    pub work: u64,
    /// Extremities produced by the next-extremity search.
    pub extremities: u64,
    /// Paths in the dominating system.
    pub rounds: u64,
    pub local_calls: u64,
    pub local_iterations: u64,
    pub cutoff: Option<u64>,
    pub delta_star: Option<u32>,
    pub quotient_n: Option<usize>,
    pub quotient_m: Option<usize>,
}

impl Stats {
    pub(crate) fn search(&mut self, g: &Graph) {
        self.searches += 1;
        self.work += (g.n() + 2 * g.m()) as u64;
    }

    pub(crate) fn absorb(&mut self, other: &Stats) {
        self.searches += other.searches;
        self.work += other.work;
        self.extremities += other.extremities;
        self.local_calls += other.local_calls;
        self.local_iterations += other.local_iterations;
    }
}

/// Center `c`, extremities x_1..x_t, shortest paths P_i from x_i to c and
/// their union H, which dominates the graph.
#[derive(Clone, Debug)]
pub struct DominatingPathSystem {
    pub c: usize,
    pub sweep: DoubleSweep,
    pub extremities: Vec<usize>,
    /// `paths[i]` runs from `extremities[i]` to `c`.
    pub paths: Vec<Vec<usize>>,
    pub h: VertexSet,
    pub dist_c: DistanceVector,
}

impl DominatingPathSystem {
    /// The vertices of P_i closest to x_i, at most `cutoff` of them.
    pub fn path_prefix(&self, i: usize, cutoff: usize) -> &[usize] {
        let p = &self.paths[i];
        &p[..p.len().min(cutoff)]
    }

    /// Union of the path prefixes, without repetition, in path order.
    pub fn prefix_union(&self, cutoff: usize) -> Vec<usize> {
        let mut seen = VertexSet::new(self.h.universe());
        let mut out = Vec::new();
        for i in 0..self.paths.len() {
            for &v in self.path_prefix(i, cutoff) {
                if seen.insert(v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

pub fn build_dominating_path_system(g: &Graph) -> Result<DominatingPathSystem> {
    build_dominating_path_system_counted(g, &mut Stats::default())
}

pub(crate) fn build_dominating_path_system_counted(g: &Graph, stats: &mut Stats) -> Result<DominatingPathSystem> {
    if g.n() < 3 {
        return Err(Error::Degenerate(format!("need n >= 3, got {}", g.n())));
    }
    let sweep = double_sweep(g)?;
    for _ in 0..3 {
        stats.search(g);
    }
    let c = sweep.c;
    let (dist_c, parent) = bfs_tree(g, c)?;
    stats.search(g);
    let mut sys = DominatingPathSystem {
        c,
        sweep: sweep.clone(),
        extremities: Vec::new(),
        paths: Vec::new(),
        h: VertexSet::new(g.n()),
        dist_c,
    };
    let mut dominated = VertexSet::new(g.n());
    let mut add = |sys: &mut DominatingPathSystem, x: usize| {
        let p = tree_path(&parent, x);
        for &v in &p {
            if sys.h.insert(v) {
                dominated.insert(v);
                for w in g.neighbors(v) {
                    dominated.insert(w);
                }
            }
        }
        sys.extremities.push(x);
        sys.paths.push(p);
        dominated.len() == g.n()
    };
    add(&mut sys, sweep.x1);
    let mut done = add(&mut sys, sweep.x2);
    if !done {
        let ord = lexbfs(g, c)?;
        stats.search(g);
        while !done {
            let s = g.closed_neighborhood_of(&sys.h);
            let x = next_extremity_with_order(g, &ord, &s)?;
            stats.extremities += 1;
            done = add(&mut sys, x);
        }
    }
    stats.rounds = sys.paths.len() as u64;
    Ok(sys)
}

/// How many vertices of each path are examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutoffMode {
    /// A known bound on the number of pairwise nonadjacent extremities.
    Alpha(u32),
    /// Derive the cutoff from the layering-partition estimate Δ*.
    Oblivious,
}

fn resolve_cutoff(
    g: &Graph,
    sys: &DominatingPathSystem,
    mode: CutoffMode,
    per_alpha: (i64, i64),
    per_delta: (u64, u64),
    stats: &mut Stats,
) -> Result<usize> {
    let cutoff = match mode {
        CutoffMode::Alpha(a) => {
            if a == 0 {
                return Err(Error::InvalidArgument("alpha must be positive".into()));
            }
            (per_alpha.0 * a as i64 - per_alpha.1).max(1) as u64
        }
        CutoffMode::Oblivious => {
            let ds = delta_star_counted(g, sys.c, &sys.paths, stats)?;
            stats.delta_star = Some(ds.value);
            per_delta.0 * ds.value as u64 + per_delta.1
        }
    };
    stats.cutoff = Some(cutoff);
    Ok(cutoff as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EccEstimates {
    pub values: Vec<u32>,
    pub stats: Stats,
}

/// ē(v) = max{d(u,v) : u ∈ U} over the `cutoff` vertices of each path
/// closest to its extremity; e(v) − 1 ≤ ē(v) ≤ e(v) on prime graphs when
/// the cutoff is large enough.
pub fn approx_all_eccentricities(g: &Graph, cutoff: usize) -> Result<EccEstimates> {
    if cutoff < 1 {
        return Err(Error::InvalidArgument("cutoff must be at least 1".into()));
    }
    let mut stats = Stats::default();
    let sys = build_dominating_path_system_counted(g, &mut stats)?;
    stats.cutoff = Some(cutoff as u64);
    let values = estimates_from(g, &sys, cutoff, &mut stats);
    Ok(EccEstimates { values, stats })
}

fn estimates_from(g: &Graph, sys: &DominatingPathSystem, cutoff: usize, stats: &mut Stats) -> Vec<u32> {
    let u = sys.prefix_union(cutoff);
    let values = u
        .par_iter()
        .map(|&s| bfs_raw(g, &[s]))
        .reduce_with(|a, b| a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect())
        .unwrap();
    for _ in &u {
        stats.search(g);
    }
    values
}

/// +1-approximate eccentricities of any connected graph, via the quotient.
pub fn approx_eccentricities(g: &Graph, mode: CutoffMode) -> Result<EccEstimates> {
    g.check_connected()?;
    let n = g.n();
    if n <= 2 {
        return Ok(EccEstimates { values: vec![(n - 1) as u32; n], stats: Stats::default() });
    }
    let q = quotient_graph(g)?;
    let mut stats = Stats { quotient_n: Some(q.quotient.n()), quotient_m: Some(q.quotient.m()), ..Stats::default() };
    if q.kind != QuotientKind::Prime {
        return Ok(EccEstimates { values: lift_eccentricities(g, &q, &[]), stats });
    }
    let qg = &q.quotient;
    let sys = build_dominating_path_system_counted(qg, &mut stats)?;
    let cutoff = resolve_cutoff(qg, &sys, mode, (66, 19), (22, 3), &mut stats)?;
    let est = estimates_from(qg, &sys, cutoff, &mut stats);
    Ok(EccEstimates { values: lift_eccentricities(g, &q, &est), stats })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterResult {
    pub value: u32,
    /// Two vertices at distance `value`.
    pub certificate: (usize, usize),
    pub certificate_verified: bool,
    pub stats: Stats,
}

pub(crate) fn certify(g: &Graph, value: u32, pair: (usize, usize), stats: Stats) -> DiameterResult {
    let d = bfs_raw(g, &[pair.0]);
    DiameterResult { value, certificate: pair, certificate_verified: d[pair.1] == value, stats }
}

/// Diameter when the complement is disconnected: 1 for complete graphs,
/// otherwise 2, certified by a non-universal vertex and a non-neighbor.
pub(crate) fn small_diameter(g: &Graph, stats: Stats) -> DiameterResult {
    match (0..g.n()).find(|&v| !g.is_universal(v)) {
        None => certify(g, 1, (0, 1), stats),
        Some(v) => {
            let w = (0..g.n()).find(|&w| w != v && !g.has_edge(v, w)).unwrap();
            certify(g, 2, (v, w), stats)
        }
    }
}

/// Exact diameter of a connected graph.
pub fn exact_diameter(g: &Graph, mode: CutoffMode) -> Result<DiameterResult> {
    g.check_connected()?;
    match g.n() {
        1 => return Ok(certify(g, 0, (0, 0), Stats::default())),
        2 => return Ok(certify(g, 1, (0, 1), Stats::default())),
        _ => {}
    }
    let q = quotient_graph(g)?;
    let mut stats = Stats { quotient_n: Some(q.quotient.n()), quotient_m: Some(q.quotient.m()), ..Stats::default() };
    if q.kind != QuotientKind::Prime {
        return Ok(small_diameter(g, stats));
    }
    let qg = &q.quotient;
    let (value, pair) = exact_diameter_prime(qg, mode, &mut stats)?;
    let pair = (q.representative[pair.0], q.representative[pair.1]);
    stats.search(qg);
    Ok(certify(g, value, pair, stats))
}

/// The main algorithm on a prime graph with at least 4 vertices: the
/// maximum of ℓ(u) over the path prefixes.
pub fn exact_diameter_prime(g: &Graph, mode: CutoffMode, stats: &mut Stats) -> Result<(u32, (usize, usize))> {
    let sys = build_dominating_path_system_counted(g, stats)?;
    let cutoff = resolve_cutoff(g, &sys, mode, (42, 11), (14, 3), stats)?;
    let u = sys.prefix_union(cutoff);
    let results: Vec<Result<(LocalEcc, Stats)>> = u
        .par_iter()
        .map(|&x| {
            let mut s = Stats::default();
            local_max_ecc_counted(g, x, &mut s).map(|r| (r, s))
        })
        .collect();
    let mut best: Option<LocalEcc> = None;
    for r in results {
        let (l, s) = r?;
        stats.absorb(&s);
        if best.is_none_or(|b| l.value > b.value) {
            best = Some(l);
        }
    }
    let b = best.expect("nonempty prefix");
    Ok((b.value, (b.witness, b.far)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::graph::{bfs, eccentricity_oracle};

    #[test]
    fn path_system_examples() {
        let sys = build_dominating_path_system(&path(5)).unwrap();
        assert_eq!(sys.c, 2);
        assert_eq!(sys.paths.len(), 2);
        assert_eq!(sys.h.len(), 5);
        let sys = build_dominating_path_system(&cycle(6)).unwrap();
        assert_eq!(sys.paths.len(), 2);
        let g = spider3();
        let sys = build_dominating_path_system(&g).unwrap();
        assert!(sys.paths.len() <= 3);
        assert_eq!(g.closed_neighborhood_of(&sys.h).len(), 7);
        for p in &sys.paths {
            let d = bfs(&g, sys.c).unwrap();
            for (k, &v) in p.iter().rev().enumerate() {
                assert_eq!(d.at(v) as usize, k);
            }
        }
    }

    #[test]
    fn local_examples() {
        let r = local_max_ecc(&path(5), 2).unwrap();
        assert_eq!(r.value, 3);
        assert!([1, 3].contains(&r.witness));
        let r = local_max_ecc(&spider3(), 0).unwrap();
        assert_eq!(r.value, 3);
        assert!([1, 3, 5].contains(&r.witness));
        assert_eq!(local_max_ecc(&petersen(), 0).unwrap().value, 2);
    }

    #[test]
    fn clean_and_discard_examples() {
        let p = path(5);
        let y = build_clean_set(&p, 2, 0).unwrap();
        for v in [0, 1, 2, 3] {
            assert!(y.members.contains(v));
        }
        // d(3,0) = 3 exceeds e(2) = 2, so S' is not defined for this pair
        assert!(build_discard_set(&p, 2, 0).is_err());
        let g = petersen();
        let v = (0..10).find(|&v| !g.has_edge(0, v) && v != 0).unwrap();
        let s = build_discard_set(&g, 0, v).unwrap();
        assert!(s.members.contains(v) && s.is_valid(&g));
        for z in s.members.iter() {
            let d = bfs(&g, z).unwrap();
            assert!(g.closed_neighborhood(0).iter().all(|x| d.at(x) <= 2));
        }
        let g = spider3();
        let y = build_clean_set(&g, 0, 2).unwrap();
        assert!(y.members.contains(2) && y.is_valid(&g));
        let c = cycle(6);
        let s = build_discard_set(&c, 0, 3).unwrap();
        assert!(s.members.contains(3));
        assert!(s.is_valid(&c));
        assert!(build_clean_set(&c, 0, 2).is_err());
        assert!(build_discard_set(&star(3), 0, 1).is_err());
    }

    #[test]
    fn approx_examples() {
        for g in [path(5), cycle(6), spider3()] {
            let e = eccentricity_oracle(&g).unwrap().eccentricities;
            let est = approx_all_eccentricities(&g, 47).unwrap().values;
            for v in 0..g.n() {
                assert!(est[v] <= e[v] && est[v] + 1 >= e[v]);
            }
        }
        assert_eq!(approx_all_eccentricities(&path(5), 47).unwrap().values, vec![4, 3, 2, 3, 4]);
        assert!(approx_all_eccentricities(&path(5), 0).is_err());
    }

    #[test]
    fn exact_examples() {
        for (g, d) in [(path(5), 4), (spider3(), 4), (petersen(), 2), (star(3), 2), (complete(4), 1), (path(2), 1)] {
            for mode in [CutoffMode::Oblivious, CutoffMode::Alpha(3)] {
                let r = exact_diameter(&g, mode).unwrap();
                assert_eq!(r.value, d);
                assert!(r.certificate_verified);
            }
        }
        let r = exact_diameter(&spider3(), CutoffMode::Oblivious).unwrap();
        let (a, b) = r.certificate;
        assert!([2, 4, 6].contains(&a) || [2, 4, 6].contains(&b));
    }
}
