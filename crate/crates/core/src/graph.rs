//! Compressed adjacency graphs, vertex sets and BFS distance primitives.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distance value stored for vertices that the search never reached.
pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph with sorted neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, duplicate edges (in
    /// either orientation) and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > u32::MAX as usize - 1 {
            return Err(Error::InvalidArgument(format!("too many vertices: {n}")));
        }
        let mut deg = vec![0usize; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &deg {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0u32; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u]] = v as u32;
            fill[u] += 1;
            targets[fill[v]] = u as u32;
            fill[v] += 1;
        }
        for v in 0..n {
            let list = &mut targets[offsets[v]..offsets[v + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v.min(w[0] as usize), v.max(w[0] as usize));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { offsets, targets })
    }

    /// Like [`Graph::from_edges`] but silently drops repeated pairs.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut norm: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        norm.sort_unstable();
        norm.dedup();
        Graph::from_edges(n, &norm)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbor list of `v`.
    pub fn adj(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj(v).iter().map(|&w| w as usize)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.adj(a).binary_search(&(b as u32)).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u).filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::from_iter(self.n(), self.neighbors(v));
        s.insert(v);
        s
    }

    /// Closed neighbourhood of a set.
    pub fn closed_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set.iter() {
            for w in self.neighbors(v) {
                out.insert(w);
            }
        }
        out
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n * n.saturating_sub(1) / 2 == self.m()
    }

    /// Subgraph induced by `vertices` (in the given order). Returns the
    /// subgraph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![u32::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i as u32;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = new_id[w];
                if j != u32::MAX && (i as u32) < j {
                    edges.push((i, j as usize));
                }
            }
        }
        let g = Graph::from_edges(vertices.len(), &edges).expect("induced subgraph is simple");
        (g, vertices.to_vec())
    }

    /// Largest connected component (ties go to the one with the smallest
    /// vertex), relabelled in increasing order of original id.
    pub fn largest_component(&self) -> (Graph, Vec<usize>) {
        let (labels, count) = component_labels(self, &VertexSet::new(self.n()));
        let mut sizes = vec![0usize; count];
        for &l in &labels {
            sizes[l as usize] += 1;
        }
        let best = (0..count).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)));
        match best {
            None => (self.clone(), (0..self.n()).collect()),
            Some(b) => {
                let keep: Vec<usize> =
                    (0..self.n()).filter(|&v| labels[v] as usize == b).collect();
                self.induced_subgraph(&keep)
            }
        }
    }

    /// Errors with two separated vertices unless the graph is connected and
    /// nonempty.
    pub fn check_connected(&self) -> Result<()> {
        if self.n() == 0 {
            return Err(Error::Degenerate("empty graph".into()));
        }
        let d = bfs_raw(self, &[0]);
        match d.iter().position(|&x| x == UNREACHABLE) {
            Some(v) => Err(Error::Disconnected(0, v)),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.check_connected().is_ok()
    }
}

/// Dense bitset over `0..n` with a cached cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
    n: usize,
    size: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet { words: vec![0; n.div_ceil(64)], n, size: 0 }
    }

    pub fn full(n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut s = VertexSet::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    /// Returns true if `v` was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} outside universe {}", self.n);
        let w = &mut self.words[v >> 6];
        let bit = 1u64 << (v & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        self.size += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let w = &mut self.words[v >> 6];
        let bit = 1u64 << (v & 63);
        let present = *w & bit != 0;
        *w &= !bit;
        self.size -= present as usize;
        present
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + t)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n);
        let mut size = 0;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
            size += a.count_ones() as usize;
        }
        self.size = size;
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| !self.contains(v)))
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

/// Hop distances from a source (or source set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: usize,
    dist: Vec<u32>,
}

impl DistanceVector {
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Distance of a vertex known to be reachable.
    pub fn at(&self, v: usize) -> u32 {
        let d = self.dist[v];
        debug_assert_ne!(d, UNREACHABLE, "vertex {v} unreachable");
        d
    }

    pub fn raw(&self) -> &[u32] {
        &self.dist
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn all_reachable(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    /// Largest finite distance.
    pub fn max_finite(&self) -> u32 {
        self.dist.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0)
    }

    /// Vertices at the largest finite distance.
    pub fn farthest(&self) -> Vec<usize> {
        let e = self.max_finite();
        (0..self.dist.len()).filter(|&v| self.dist[v] == e).collect()
    }
}

pub(crate) fn bfs_raw(g: &Graph, sources: &[usize]) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    for &s in sources {
        if dist[s] == UNREACHABLE {
            dist[s] = 0;
            queue.push(s as u32);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head] as usize;
        head += 1;
        let next = dist[v] + 1;
        for &w in g.adj(v) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = next;
                queue.push(w);
            }
        }
    }
    dist
}

pub fn bfs(g: &Graph, source: usize) -> Result<DistanceVector> {
    g.check_vertex(source)?;
    Ok(DistanceVector { source, dist: bfs_raw(g, &[source]) })
}

pub fn multi_source_bfs(g: &Graph, sources: &VertexSet) -> Result<DistanceVector> {
    let list = sources.to_vec();
    let Some(&first) = list.first() else {
        return Err(Error::EmptySources);
    };
    if sources.universe() != g.n() {
        return Err(Error::InvalidArgument("source set universe differs from graph".into()));
    }
    Ok(DistanceVector { source: first, dist: bfs_raw(g, &list) })
}

/// BFS that also records, for every reached vertex, its smallest-id
/// neighbor one step closer to the source.
pub fn bfs_tree(g: &Graph, source: usize) -> Result<(DistanceVector, Vec<u32>)> {
    let d = bfs(g, source)?;
    let parent = (0..g.n())
        .map(|v| {
            let dv = d.dist[v];
            if dv == 0 || dv == UNREACHABLE {
                return UNREACHABLE;
            }
            *g.adj(v).iter().find(|&&w| d.dist[w as usize] + 1 == dv).unwrap()
        })
        .collect();
    Ok((d, parent))
}

/// Walks parent pointers from `target` back to the tree root; the
/// returned path starts at `target`.
pub fn tree_path(parent: &[u32], target: usize) -> Vec<usize> {
    let mut path = vec![target];
    let mut v = target;
    while parent[v] != UNREACHABLE {
        v = parent[v] as usize;
        path.push(v);
    }
    path
}

/// Labels each vertex outside `removed` by its component in the induced
/// subgraph; removed vertices get `u32::MAX`.
pub fn component_labels(g: &Graph, removed: &VertexSet) -> (Vec<u32>, usize) {
    let n = g.n();
    let mut label = vec![u32::MAX; n];
    let mut count = 0u32;
    let mut stack = Vec::new();
    for s in 0..n {
        if removed.contains(s) || label[s] != u32::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if label[w] == u32::MAX && !removed.contains(w) {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count as usize)
}

pub fn components_after_removing(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let (label, count) = component_labels(g, removed);
    let mut comps = vec![VertexSet::new(g.n()); count];
    for (v, &l) in label.iter().enumerate() {
        if l != u32::MAX {
            comps[l as usize].insert(v);
        }
    }
    comps
}

/// Whether `w` lies on a shortest `u`–`v` path.
pub fn interval_test(
    _g: &Graph,
    _u: usize,
    v: usize,
    w: usize,
    du: &DistanceVector,
    dv: &DistanceVector,
) -> bool {
    match (du.get(v), du.get(w), dv.get(w)) {
        (Some(a), Some(b), Some(c)) => a == b + c,
        _ => false,
    }
}

/// Result of running a BFS from every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub eccentricities: Vec<u32>,
    pub diameter: u32,
    pub radius: u32,
    pub diametral_pair: (usize, usize),
    pub center: Vec<usize>,
}

pub fn eccentricity_oracle(g: &Graph) -> Result<OracleReport> {
    g.check_connected()?;
    let rows: Vec<(u32, usize)> = (0..g.n())
        .into_par_iter()
        .map(|s| {
            let d = bfs_raw(g, &[s]);
            let (far, e) = d
                .iter()
                .enumerate()
                .max_by_key(|&(v, &x)| (x, std::cmp::Reverse(v)))
                .map(|(v, &x)| (v, x))
                .unwrap();
            (e, far)
        })
        .collect();
    let eccentricities: Vec<u32> = rows.iter().map(|r| r.0).collect();
    let diameter = *eccentricities.iter().max().unwrap();
    let radius = *eccentricities.iter().min().unwrap();
    let a = eccentricities.iter().position(|&e| e == diameter).unwrap();
    let center = (0..g.n()).filter(|&v| eccentricities[v] == radius).collect();
    Ok(OracleReport { eccentricities, diameter, radius, diametral_pair: (a, rows[a].1), center })
}
