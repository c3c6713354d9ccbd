//! Shared corpus and reference oracles for the integration tests. The
//! oracles here use only the public graph accessors and plain std code.
#![allow(dead_code)]

use std::collections::VecDeque;

use extremal_diam::generators::{generate_connected, Family, GenSpec};
use extremal_diam::{fixtures, Graph};
use rayon::prelude::*;

pub const INF: u32 = u32::MAX;

pub struct Instance {
    pub name: String,
    pub g: Graph,
}

fn spec(family: Family, n: usize, k: usize, density: f64, seed: u64) -> GenSpec {
    GenSpec::new(family, n, k, density, seed)
}

/// Generated graphs across every family, largest components only.
pub fn corpus() -> Vec<Instance> {
    let mut specs = Vec::new();
    for n in [20, 50, 100, 200, 500, 1000, 2000] {
        for density in [2.0, 4.0] {
            for seed in 1..=8 {
                specs.push(spec(Family::Interval, n, 0, density, seed));
            }
        }
    }
    for n in [15, 40, 80, 150] {
        for seed in 1..=8 {
            specs.push(spec(Family::Permutation, n, 0, 0.0, seed));
        }
    }
    for n in [100, 500, 1000, 2000] {
        for seed in 1..=8 {
            specs.push(spec(Family::Permutation, n, 0, 3.0, seed));
        }
    }
    for n in [20, 50, 100, 300] {
        for k in [3, 4, 6] {
            for seed in 1..=6 {
                specs.push(spec(Family::KPolygon, n, k, 0.0, seed));
            }
        }
    }
    for n in [30, 100, 300, 1000] {
        for k in [3, 5] {
            for density in [1.0, 3.0] {
                for seed in 1..=4 {
                    specs.push(spec(Family::ChordalLeafage, n, k, density, seed));
                }
            }
        }
    }
    for legs in 3..=8 {
        for len in 1..=6 {
            specs.push(spec(Family::Spider, legs, len, 0.0, 0));
        }
    }
    for n in [30, 100, 500, 2000] {
        for density in [0.2, 0.6] {
            for seed in 1..=4 {
                specs.push(spec(Family::Caterpillar, n, 0, density, seed));
            }
        }
    }
    for (n, p) in [(6, 0.5), (8, 0.4), (10, 0.35), (20, 0.2), (40, 0.1), (80, 0.05), (150, 0.03)] {
        for seed in 1..=12 {
            specs.push(spec(Family::GnpPrime, n, 0, p, seed));
        }
    }
    for n in [10, 30, 60, 120, 200] {
        for density in [0.1, 0.4] {
            for seed in 1..=3 {
                specs.push(spec(Family::Split, n, 0, density, seed));
            }
        }
    }
    for n in [50, 200, 1000, 2000] {
        for seed in 1..=3 {
            specs.push(spec(Family::DomEdge, n, 0, 0.5, seed));
        }
    }
    let mut out: Vec<Instance> = specs
        .par_iter()
        .map(|s| Instance { name: s.to_string(), g: generate_connected(s).expect("generator") })
        .collect();
    out.extend(fixture_instances());
    out
}

pub fn fixture_instances() -> Vec<Instance> {
    vec![
        Instance { name: "path5".into(), g: fixtures::path(5) },
        Instance { name: "cycle6".into(), g: fixtures::cycle(6) },
        Instance { name: "cycle9".into(), g: fixtures::cycle(9) },
        Instance { name: "k4".into(), g: fixtures::complete(4) },
        Instance { name: "star5".into(), g: fixtures::star(5) },
        Instance { name: "petersen".into(), g: fixtures::petersen() },
        Instance { name: "spider3".into(), g: fixtures::spider3() },
    ]
}

/// Small random graphs from a local generator, for exhaustive oracles.
pub fn tiny_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut state = seed;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut out = Vec::new();
    while out.len() < count {
        let n = 3 + (next() % (max_n as u64 - 2)) as usize;
        let p = 20 + next() % 60;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if next() % 100 < p {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

pub fn bfs_ref(g: &Graph, s: usize) -> Vec<u32> {
    let mut d = vec![INF; g.n()];
    let mut q = VecDeque::new();
    d[s] = 0;
    q.push_back(s);
    while let Some(v) = q.pop_front() {
        for &w in g.adj(v) {
            let w = w as usize;
            if d[w] == INF {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

pub fn apsp(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n()).into_par_iter().map(|s| bfs_ref(g, s)).collect()
}

pub fn eccentricities(dist: &[Vec<u32>]) -> Vec<u32> {
    dist.iter().map(|row| *row.iter().max().unwrap()).collect()
}

/// Connected components of the graph with `removed` deleted, as labels
/// (`INF` for removed vertices) and a count.
pub fn components_ref(g: &Graph, removed: &[bool]) -> (Vec<u32>, u32) {
    let mut label = vec![INF; g.n()];
    let mut count = 0;
    for s in 0..g.n() {
        if removed[s] || label[s] != INF {
            continue;
        }
        let mut stack = vec![s];
        label[s] = count;
        while let Some(v) = stack.pop() {
            for &w in g.adj(v) {
                let w = w as usize;
                if !removed[w] && label[w] == INF {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

pub fn closed_nbhd(g: &Graph, v: usize) -> Vec<bool> {
    let mut m = vec![false; g.n()];
    m[v] = true;
    for &w in g.adj(v) {
        m[w as usize] = true;
    }
    m
}

/// Removing N[v] leaves at most one component (the graph is connected).
pub fn is_extremity_ref(g: &Graph, v: usize) -> bool {
    components_ref(g, &closed_nbhd(g, v)).1 <= 1
}

/// For x ∈ S and y ∉ N[x], if N[y] separates x from u then y ∈ S.
pub fn is_transitive_ref(g: &Graph, u: usize, s: &[bool]) -> bool {
    for y in 0..g.n() {
        if s[y] {
            continue;
        }
        let ny = closed_nbhd(g, y);
        if ny[u] {
            continue;
        }
        let (label, _) = components_ref(g, &ny);
        if (0..g.n()).any(|x| s[x] && !ny[x] && label[x] != label[u]) {
            return false;
        }
    }
    true
}

/// Every connected vertex set containing `d` dominates, by enumerating all
/// supersets. Only for tiny graphs.
pub fn is_dominating_target_ref(g: &Graph, d: &[usize]) -> bool {
    let n = g.n();
    assert!(n <= 16);
    let base: u32 = d.iter().map(|&v| 1u32 << v).sum();
    let free: Vec<usize> = (0..n).filter(|v| base & (1 << v) == 0).collect();
    for mask in 0u32..(1 << free.len()) {
        let mut set = base;
        for (i, &v) in free.iter().enumerate() {
            if mask & (1 << i) != 0 {
                set |= 1 << v;
            }
        }
        let removed: Vec<bool> = (0..n).map(|v| set & (1 << v) == 0).collect();
        if components_ref(g, &removed).1 != 1 {
            continue;
        }
        let dominated = (0..n).all(|v| set & (1 << v) != 0 || g.adj(v).iter().any(|&w| set & (1 << w) != 0));
        if !dominated {
            return false;
        }
    }
    true
}

pub fn is_module_ref(g: &Graph, m: &[bool]) -> bool {
    (0..g.n()).filter(|&x| !m[x]).all(|x| {
        let mut seen = (0..g.n()).filter(|&v| m[v]).map(|v| g.has_edge(x, v));
        let first = seen.next();
        seen.all(|b| Some(b) == first)
    })
}

/// No module strictly between a singleton and the whole vertex set.
pub fn is_prime_ref(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 16);
    if n <= 2 {
        return true;
    }
    for mask in 1u32..(1 << n) - 1 {
        if mask.count_ones() < 2 {
            continue;
        }
        let m: Vec<bool> = (0..n).map(|v| mask & (1 << v) != 0).collect();
        if is_module_ref(g, &m) {
            return false;
        }
    }
    true
}

/// Repeated removal of simplicial vertices.
pub fn is_chordal_ref(g: &Graph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let v = (0..n).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = g.neighbors(v).filter(|&w| alive[w]).collect();
                nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            }
        });
        match v {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// Largest independent subset of `set`, by brute force.
pub fn alpha_ref(g: &Graph, set: &[usize]) -> usize {
    fn go(g: &Graph, set: &[usize], i: usize, cur: &mut Vec<usize>, best: &mut usize) {
        if cur.len() + (set.len() - i) <= *best {
            return;
        }
        if i == set.len() {
            *best = cur.len();
            return;
        }
        let v = set[i];
        if cur.iter().all(|&u| !g.has_edge(u, v)) {
            cur.push(v);
            go(g, set, i + 1, cur, best);
            cur.pop();
        }
        go(g, set, i + 1, cur, best);
    }
    let mut best = 0;
    go(g, set, 0, &mut Vec::new(), &mut best);
    best
}

/// Gromov δ from the four-point condition, doubled to stay integral.
pub fn four_point_ref(dist: &[Vec<u32>]) -> u32 {
    let n = dist.len();
    (0..n)
        .into_par_iter()
        .map(|x| {
            let mut best = 0;
            for y in x..n {
                for u in y..n {
                    for v in u..n {
                        let mut s = [
                            dist[x][y] + dist[u][v],
                            dist[x][u] + dist[y][v],
                            dist[x][v] + dist[y][u],
                        ];
                        s.sort_unstable();
                        best = best.max(s[2] - s[1]);
                    }
                }
            }
            best
        })
        .max()
        .unwrap_or(0)
}

/// A connected graph: a random spanning tree plus each other pair with
/// probability `p_percent`/100.
pub fn random_connected(n: usize, p_percent: u64, seed: u64) -> Graph {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push(((next() % v as u64) as usize, v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if next() % 100 < p_percent {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges_dedup(n, &edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n, 0u64..60, any::<u64>()).prop_map(|(n, p, seed)| random_connected(n, p, seed))
}
