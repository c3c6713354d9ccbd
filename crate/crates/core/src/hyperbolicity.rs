//! Layering partition around a center, the Δ* estimate of its cluster
//! diameter, and a four-point hyperbolicity oracle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{DominatingPathSystem, Stats};
use crate::error::{Error, Result};
use crate::graph::{bfs_raw, Graph, UNREACHABLE};

pub const FOUR_POINT_CAP: usize = 120;

struct DisjointSets {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> DisjointSets {
        DisjointSets { parent: (0..n as u32).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (a, b) = if self.rank[a] < self.rank[b] { (b, a) } else { (a, b) };
        self.parent[b] = a as u32;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
    }
}

/// Classes of u ~ v: same distance j from `center`, and joined by a path
/// avoiding every vertex at distance < j.
#[derive(Clone, Debug)]
pub struct LayeringPartition {
    pub center: usize,
    /// Each class sorted by vertex id.
    pub classes: Vec<Vec<usize>>,
    pub layer: Vec<u32>,
    pub class_of: Vec<usize>,
}

impl LayeringPartition {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }
}

pub fn layering_partition(g: &Graph, c: usize) -> Result<LayeringPartition> {
    g.check_vertex(c)?;
    g.check_connected()?;
    let n = g.n();
    let d = bfs_raw(g, &[c]);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(d[v]));
    let mut dsu = DisjointSets::new(n);
    let mut inserted = vec![false; n];
    let mut class_of = vec![usize::MAX; n];
    let mut root_class = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut layer = Vec::new();
    let mut i = 0;
    while i < n {
        let j = d[order[i]];
        let mut k = i;
        while k < n && d[order[k]] == j {
            inserted[order[k]] = true;
            k += 1;
        }
        for &v in &order[i..k] {
            for w in g.neighbors(v) {
                if inserted[w] {
                    dsu.union(v, w);
                }
            }
        }
        let mut layer_vs: Vec<usize> = order[i..k].to_vec();
        layer_vs.sort_unstable();
        let mut roots = Vec::new();
        for &v in &layer_vs {
            let r = dsu.find(v);
            if root_class[r] == usize::MAX {
                classes.push(Vec::new());
                layer.push(j);
                root_class[r] = classes.len() - 1;
                roots.push(r);
            }
            let id = root_class[r];
            classes[id].push(v);
            class_of[v] = id;
        }
        for r in roots {
            root_class[r] = usize::MAX;
        }
        i = k;
    }
    Ok(LayeringPartition { center: c, classes, layer, class_of })
}

/// Δ_c: the largest distance between two vertices of one class.
pub fn delta_c_exact(g: &Graph, c: usize) -> Result<u32> {
    let lp = layering_partition(g, c)?;
    let best = lp
        .classes
        .par_iter()
        .filter(|cl| cl.len() > 1)
        .map(|cl| {
            cl.iter()
                .map(|&v| {
                    let d = bfs_raw(g, &[v]);
                    cl.iter().map(|&w| d[w]).max().unwrap()
                })
                .max()
                .unwrap()
        })
        .max();
    Ok(best.unwrap_or(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaStar {
    pub value: u32,
    pub class: usize,
    pub vertex: usize,
    pub path: usize,
}

/// Δ* = max 2·d(v, P_i) + 2 over classes C, v ∈ C and paths P_i whose closed
/// neighborhood meets C.
pub fn delta_star(g: &Graph, sys: &DominatingPathSystem) -> Result<DeltaStar> {
    delta_star_counted(g, sys.c, &sys.paths, &mut Stats::default())
}

pub(crate) fn delta_star_counted(g: &Graph, c: usize, paths: &[Vec<usize>], stats: &mut Stats) -> Result<DeltaStar> {
    if paths.is_empty() {
        return Err(Error::InvalidArgument("no paths".into()));
    }
    let lp = layering_partition(g, c)?;
    stats.search(g);
    let per_path: Vec<DeltaStar> = paths
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let mut labeled = vec![false; lp.num_classes()];
            for &v in p {
                labeled[lp.class_of[v]] = true;
                for w in g.neighbors(v) {
                    labeled[lp.class_of[w]] = true;
                }
            }
            let d = bfs_raw(g, p);
            let mut best = DeltaStar { value: 0, class: 0, vertex: c, path: i };
            for v in 0..g.n() {
                let cl = lp.class_of[v];
                if labeled[cl] && d[v] != UNREACHABLE && 2 * d[v] + 2 > best.value {
                    best = DeltaStar { value: 2 * d[v] + 2, class: cl, vertex: v, path: i };
                }
            }
            best
        })
        .collect();
    for _ in paths {
        stats.search(g);
    }
    Ok(per_path.into_iter().max_by_key(|d| (d.value, std::cmp::Reverse(d.path))).unwrap())
}

/// Twice the Gromov hyperbolicity, by checking every quadruple.
pub fn four_point_delta_oracle(g: &Graph) -> Result<u32> {
    let n = g.n();
    if n > FOUR_POINT_CAP {
        return Err(Error::CapExceeded { n, cap: FOUR_POINT_CAP });
    }
    g.check_connected()?;
    let d: Vec<Vec<u32>> = (0..n).into_par_iter().map(|v| bfs_raw(g, &[v])).collect();
    let best = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut best = 0;
            for b in a + 1..n {
                for c in b + 1..n {
                    for e in c + 1..n {
                        let mut s = [d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]];
                        s.sort_unstable();
                        best = best.max(s[2] - s[1]);
                    }
                }
            }
            best
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}
