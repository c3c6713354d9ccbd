//! ℓ(u) = max{e(x) : x ∈ N[u]} by a sweep over extremities of F(u),
//! discarding `u`-transitive sets proven unable to reach distance e(u)+1.

use crate::error::{Error, Result};
use crate::extremities::{next_extremity_with_order, TransitiveSet};
use crate::graph::{bfs_raw, Graph, VertexSet, UNREACHABLE};
use crate::search::lexbfs;

use super::Stats;

/// ℓ(u) with the vertex `witness ∈ N[u]` attaining it and a vertex `far`
/// at distance ℓ(u) from the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalEcc {
    pub value: u32,
    pub witness: usize,
    pub far: usize,
}

/// Epoch-stamped scratch marks.
struct Marks {
    stamp: Vec<u32>,
    epoch: u32,
}

impl Marks {
    fn new(n: usize) -> Marks {
        Marks { stamp: vec![0; n], epoch: 0 }
    }
    fn reset(&mut self) {
        self.epoch += 1;
    }
    fn set(&mut self, v: usize) -> bool {
        let fresh = self.stamp[v] != self.epoch;
        self.stamp[v] = self.epoch;
        fresh
    }
    fn get(&self, v: usize) -> bool {
        self.stamp[v] == self.epoch
    }
}

/// The set Y for `v ∈ F(u)`: vertices not in F(u), plus those of F(u)
/// adjacent to all of N(v) ∩ I(u,v) that intercept every second edge of the
/// BFS-tree paths from `v` to X = {x ∈ N[u] : d(x,v) = e(u)}.
pub(crate) fn clean_set_inner(g: &Graph, u: usize, v: usize, du: &[u32], dv: &[u32], e: u32) -> VertexSet {
    let n = g.n();
    let mut y = VertexSet::new(n);
    if g.has_edge(u, v) {
        y.insert(v);
        return y;
    }
    for z in 0..n {
        if du[z] < e {
            y.insert(z);
        }
    }
    // depth-2 ancestor in the BFS tree from v, following smallest-id parents
    let parent = |z: usize| -> usize { g.neighbors(z).find(|&w| dv[w] + 1 == dv[z]).unwrap() };
    let mut anc2 = vec![u32::MAX; n];
    let mut p_of_q: Vec<(usize, usize)> = Vec::new();
    let mut seen_q = Marks::new(n);
    seen_q.reset();
    let mut trail = Vec::new();
    for x in g.neighbors(u).chain([u]) {
        if dv[x] != e {
            continue;
        }
        let mut z = x;
        trail.clear();
        while dv[z] > 2 && anc2[z] == u32::MAX {
            trail.push(z);
            z = parent(z);
        }
        let q = if dv[z] == 2 { z } else { anc2[z] as usize };
        for &t in &trail {
            anc2[t] = q as u32;
        }
        anc2[q] = q as u32;
        if seen_q.set(q) {
            p_of_q.push((parent(q), q));
        }
    }
    p_of_q.sort_unstable();

    // Z = {z ∈ F(u) : N(v) ∩ I(u,v) ⊆ N(z)}
    let pu: Vec<usize> = g.neighbors(v).filter(|&p| du[p] + 1 == e).collect();
    let mut cnt = vec![0u32; n];
    for &p in &pu {
        for z in g.neighbors(p) {
            cnt[z] += 1;
        }
    }
    let in_z = |z: usize| du[z] == e && cnt[z] as usize == pu.len();

    // z must intercept each (p, q): z ∈ N[p], or z ∈ N[q] for all q of p
    let mut sat = vec![0u32; n];
    let mut groups = 0u32;
    let mut in_p = Marks::new(n);
    let mut touched = Marks::new(n);
    let mut cq = vec![0u32; n];
    let mut list = Vec::new();
    let mut i = 0;
    while i < p_of_q.len() {
        let p = p_of_q[i].0;
        let mut j = i;
        while j < p_of_q.len() && p_of_q[j].0 == p {
            j += 1;
        }
        groups += 1;
        in_p.reset();
        touched.reset();
        list.clear();
        for z in g.neighbors(p).chain([p]) {
            in_p.set(z);
            if touched.set(z) {
                cq[z] = 0;
                list.push(z);
            }
        }
        for &(_, q) in &p_of_q[i..j] {
            for z in g.neighbors(q).chain([q]) {
                if touched.set(z) {
                    cq[z] = 0;
                    list.push(z);
                }
                cq[z] += 1;
            }
        }
        let need = (j - i) as u32;
        for &z in &list {
            if in_p.get(z) || cq[z] == need {
                sat[z] += 1;
            }
        }
        i = j;
    }
    for z in 0..n {
        if in_z(z) && sat[z] == groups {
            y.insert(z);
        }
    }
    y
}

/// S′ ⊆ Y: drops members of Y that might reach distance e(u)+1 from N[u].
/// Requires d(x,v) ≤ e(u) for all x ∈ N[u].
pub(crate) fn discard_set_inner(
    g: &Graph,
    u: usize,
    v: usize,
    du: &[u32],
    dv: &[u32],
    e: u32,
    stats: &mut Stats,
) -> VertexSet {
    let y = clean_set_inner(g, u, v, du, dv, e);
    let xp: Vec<usize> = g.neighbors(u).chain([u]).filter(|&x| dv[x] + 1 == e).collect();
    if xp.is_empty() {
        // every x ∈ N[u] is at distance e(u) from v, so Y already qualifies
        return y;
    }
    let dx = bfs_raw(g, &xp);
    stats.search(g);
    let w: Vec<usize> = g.neighbors(v).filter(|&p| dx[p] != UNREACHABLE && dx[p] + 2 == e).collect();
    let mut cnt = vec![0u32; g.n()];
    for &p in &w {
        for z in g.neighbors(p) {
            cnt[z] += 1;
        }
    }
    let mut out = VertexSet::new(g.n());
    for z in y.iter() {
        let d = dx[z];
        let keep = if d == UNREACHABLE || d >= e {
            false
        } else if d + 2 <= e {
            true
        } else {
            cnt[z] as usize == w.len()
        };
        if keep {
            out.insert(z);
        }
    }
    out
}

struct FarthestInfo {
    du: Vec<u32>,
    e: u32,
}

fn far_info(g: &Graph, u: usize) -> Result<FarthestInfo> {
    g.check_vertex(u)?;
    let du = bfs_raw(g, &[u]);
    if du.contains(&UNREACHABLE) {
        let v = du.iter().position(|&d| d == UNREACHABLE).unwrap();
        return Err(Error::Disconnected(u, v));
    }
    let e = *du.iter().max().unwrap();
    Ok(FarthestInfo { du, e })
}

/// The set Y for `v ∈ F(u)`: contains `v`, is `u`-transitive, and every
/// member is no farther than `v` from each x ∈ N[u] with d(x,v) = e(u).
pub fn build_clean_set(g: &Graph, u: usize, v: usize) -> Result<TransitiveSet> {
    let info = far_info(g, u)?;
    g.check_vertex(v)?;
    if info.du[v] != info.e {
        return Err(Error::Precondition(format!("{v} is not a farthest vertex from {u}")));
    }
    let dv = bfs_raw(g, &[v]);
    Ok(TransitiveSet { anchor: u, members: clean_set_inner(g, u, v, &info.du, &dv, info.e) })
}

/// The set S′ for `v ∈ F(u)`: contains `v`, is `u`-transitive, and no
/// member is at distance more than e(u) from any vertex of N[u].
pub fn build_discard_set(g: &Graph, u: usize, v: usize) -> Result<TransitiveSet> {
    let info = far_info(g, u)?;
    g.check_vertex(v)?;
    if info.e < 2 {
        return Err(Error::Precondition(format!("{u} is universal")));
    }
    if info.du[v] != info.e {
        return Err(Error::Precondition(format!("{v} is not a farthest vertex from {u}")));
    }
    let dv = bfs_raw(g, &[v]);
    if let Some(x) = g.neighbors(u).find(|&x| dv[x] > info.e) {
        return Err(Error::Precondition(format!("d({x},{v}) exceeds e({u})")));
    }
    let members = discard_set_inner(g, u, v, &info.du, &dv, info.e, &mut Stats::default());
    Ok(TransitiveSet { anchor: u, members })
}

/// ℓ(u) = max{e(x) : x ∈ N[u]} for a prime graph with at least 3 vertices.
pub fn local_max_ecc(g: &Graph, u: usize) -> Result<LocalEcc> {
    local_max_ecc_counted(g, u, &mut Stats::default())
}

pub(crate) fn local_max_ecc_counted(g: &Graph, u: usize, stats: &mut Stats) -> Result<LocalEcc> {
    if g.n() < 3 {
        return Err(Error::Degenerate(format!("need n >= 3, got {}", g.n())));
    }
    let FarthestInfo { du, e } = far_info(g, u)?;
    stats.search(g);
    if e < 2 {
        return Err(Error::Precondition(format!("{u} is universal")));
    }
    stats.local_calls += 1;
    let far: Vec<usize> = (0..g.n()).filter(|&z| du[z] == e).collect();
    let ord = lexbfs(g, u)?;
    stats.search(g);
    let mut discarded = VertexSet::new(g.n());
    let mut far_left = far.len();
    let mut v = ord.last();
    loop {
        debug_assert_eq!(du[v], e);
        stats.local_iterations += 1;
        let dv = bfs_raw(g, &[v]);
        stats.search(g);
        if let Some(x) = g.neighbors(u).find(|&x| dv[x] == e + 1) {
            return Ok(LocalEcc { value: e + 1, witness: x, far: v });
        }
        let s = discard_set_inner(g, u, v, &du, &dv, e, stats);
        debug_assert!(s.contains(v));
        for z in s.iter() {
            if discarded.insert(z) && du[z] == e {
                far_left -= 1;
            }
        }
        if far_left == 0 {
            return Ok(LocalEcc { value: e, witness: u, far: far[0] });
        }
        v = next_extremity_with_order(g, &ord, &discarded)?;
        stats.extremities += 1;
    }
}
