//! Seeded random graphs from intersection models and a few constructions
//! with known structure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::Graph;
use crate::modular::is_prime;
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Interval,
    Permutation,
    KPolygon,
    ChordalLeafage,
    Spider,
    Caterpillar,
    GnpPrime,
    Split,
    DomEdge,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Interval,
        Family::Permutation,
        Family::KPolygon,
        Family::ChordalLeafage,
        Family::Spider,
        Family::Caterpillar,
        Family::GnpPrime,
        Family::Split,
        Family::DomEdge,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Interval => "interval",
            Family::Permutation => "permutation",
            Family::KPolygon => "kpolygon",
            Family::ChordalLeafage => "chordal-leafage",
            Family::Spider => "spider",
            Family::Caterpillar => "caterpillar",
            Family::GnpPrime => "gnp-prime",
            Family::Split => "split",
            Family::DomEdge => "domedge",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// "family:n:k:density:seed". For spiders n is the number of legs and k
/// the leg length.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub density: f64,
    pub seed: u64,
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:{}:{}", self.family.tag(), self.n, self.k, self.density, self.seed)
    }
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenSpec> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        if parts.len() != 5 {
            return Err(Error::InvalidArgument(format!("expected family:n:k:density:seed, got {s:?}")));
        }
        let bad = |what: &str| Error::InvalidArgument(format!("invalid {what} in {s:?}"));
        Ok(GenSpec {
            family: parts[0].parse()?,
            n: parts[1].parse().map_err(|_| bad("n"))?,
            k: parts[2].parse().map_err(|_| bad("k"))?,
            density: parts[3].parse().map_err(|_| bad("density"))?,
            seed: parts[4].parse().map_err(|_| bad("seed"))?,
        })
    }
}

impl GenSpec {
    pub fn new(family: Family, n: usize, k: usize, density: f64, seed: u64) -> GenSpec {
        GenSpec { family, n, k, density, seed }
    }
}

/// The graph described by `spec`; may be disconnected.
pub fn generate(spec: &GenSpec) -> Result<Graph> {
    let GenSpec { family, n, k, density, seed } = *spec;
    match family {
        Family::Interval => gen_interval(n, density, seed),
        Family::Permutation => gen_permutation_local(n, density, seed),
        Family::KPolygon => gen_kpolygon(n, k, seed),
        Family::ChordalLeafage => gen_chordal_leafage(n, k, density, seed),
        Family::Spider => Ok(gen_spider(n, k)),
        Family::Caterpillar => gen_caterpillar(n, density, seed),
        Family::GnpPrime => gen_gnp_prime(n, density, seed),
        Family::Split => gen_split(n, density, seed),
        Family::DomEdge => gen_domedge(n, density, seed),
    }
}

/// The largest connected component of the generated graph.
pub fn generate_connected(spec: &GenSpec) -> Result<Graph> {
    let g = generate(spec)?;
    Ok(if g.is_connected() { g } else { g.largest_component().0 })
}

fn need_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(())
}

/// Intersection graph of closed intervals.
pub fn interval_graph(iv: &[(f64, f64)]) -> Graph {
    let mut idx: Vec<usize> = (0..iv.len()).collect();
    idx.sort_by(|&a, &b| iv[a].0.total_cmp(&iv[b].0).then(a.cmp(&b)));
    let mut edges = Vec::new();
    for (p, &i) in idx.iter().enumerate() {
        for &j in &idx[p + 1..] {
            if iv[j].0 > iv[i].1 {
                break;
            }
            edges.push((i, j));
        }
    }
    Graph::from_edges(iv.len(), &edges).unwrap()
}

/// Left ends i + U(0,1) and lengths 2 + U(0, 2(density − 2)); consecutive
/// intervals always meet, so the graph is connected with average degree
/// about 2·density.
pub fn gen_interval(n: usize, density: f64, seed: u64) -> Result<Graph> {
    need_n(n)?;
    let mut rng = SplitMix64::new(seed);
    let spread = 2.0 * (density - 2.0).max(0.0);
    let iv: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let l = i as f64 + rng.next_f64();
            (l, l + 2.0 + spread * rng.next_f64())
        })
        .collect();
    Ok(interval_graph(&iv))
}

/// Inversion graph: i ~ j when i < j and perm[i] > perm[j].
pub fn permutation_graph(perm: &[usize]) -> Graph {
    let n = perm.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniformly random permutation.
pub fn gen_permutation(n: usize, seed: u64) -> Result<Graph> {
    need_n(n)?;
    let mut rng = SplitMix64::new(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    Ok(permutation_graph(&perm))
}

/// Density 0 gives a uniform permutation; otherwise position i is jittered
/// by U(0, density) before ranking, which keeps inversions local.
pub fn gen_permutation_local(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if density <= 0.0 {
        return gen_permutation(n, seed);
    }
    need_n(n)?;
    let mut rng = SplitMix64::new(seed);
    let keys: Vec<f64> = (0..n).map(|i| i as f64 + density * rng.next_f64()).collect();
    let mut by_key: Vec<usize> = (0..n).collect();
    by_key.sort_by(|&a, &b| keys[a].total_cmp(&keys[b]));
    let mut perm = vec![0; n];
    for (rank, &i) in by_key.iter().enumerate() {
        perm[i] = rank;
    }
    Ok(permutation_graph(&perm))
}

/// Chords of a convex polygon given by perimeter positions in [0, k), side
/// s being [s, s+1). Two chords cross when exactly one end of one lies
/// strictly inside the arc spanned by the other.
pub fn chord_graph(chords: &[(f64, f64)]) -> Graph {
    let norm: Vec<(f64, f64)> = chords.iter().map(|&(a, b)| if a < b { (a, b) } else { (b, a) }).collect();
    let mut edges = Vec::new();
    for i in 0..norm.len() {
        let (a, b) = norm[i];
        for (j, &(c, d)) in norm.iter().enumerate().skip(i + 1) {
            let inside = |x: f64| a < x && x < b;
            if inside(c) != inside(d) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(chords.len(), &edges).unwrap()
}

pub fn gen_kpolygon(n: usize, k: usize, seed: u64) -> Result<Graph> {
    need_n(n)?;
    if k < 2 {
        return Err(Error::InvalidArgument("k-polygon needs k >= 2".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let chords: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let s = rng.index(k);
            let t = (s + 1 + rng.index(k - 1)) % k;
            (s as f64 + rng.next_f64(), t as f64 + rng.next_f64())
        })
        .collect();
    Ok(chord_graph(&chords))
}

/// Host tree: a spider with `k` legs, so exactly `k` leaves. Each vertex is
/// a ball of random center and radius in the host, and balls of a tree
/// meet exactly when their centers are within the sum of the radii.
pub fn gen_chordal_leafage(n: usize, k: usize, density: f64, seed: u64) -> Result<Graph> {
    need_n(n)?;
    if k < 2 {
        return Err(Error::InvalidArgument("leafage needs k >= 2".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let leg = (n / k).max(2);
    let max_r = density.max(1.0) as u64;
    // host node = (leg, depth), depth 0 being the shared center
    let balls: Vec<(usize, usize, usize)> = (0..n)
        .map(|_| {
            let depth = rng.index(leg + 1);
            let l = if depth == 0 { 0 } else { rng.index(k) };
            (l, depth, rng.below(max_r + 1) as usize)
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        let (li, di, ri) = balls[i];
        for (j, &(lj, dj, rj)) in balls.iter().enumerate().skip(i + 1) {
            let d = if li == lj { di.abs_diff(dj) } else { di + dj };
            if d <= ri + rj {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn gen_spider(legs: usize, leglen: usize) -> Graph {
    fixtures::spider(legs, leglen)
}

/// A spine of about n/2 vertices; each other vertex hangs off one spine
/// vertex, or with probability `density` off two consecutive ones.
pub fn gen_caterpillar(n: usize, density: f64, seed: u64) -> Result<Graph> {
    need_n(n)?;
    let mut rng = SplitMix64::new(seed);
    let spine = n.div_ceil(2);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for v in spine..n {
        let s = rng.index(spine);
        edges.push((s, v));
        if s + 1 < spine && rng.chance(density) {
            edges.push((s + 1, v));
        }
    }
    Graph::from_edges(n, &edges)
}

const PRIME_RETRIES: usize = 1000;

/// G(n, p) resampled until connected and prime.
pub fn gen_gnp_prime(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidArgument("prime graphs with edges need n >= 4".into()));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..PRIME_RETRIES {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.chance(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() && is_prime(&g).prime {
            return Ok(g);
        }
    }
    Err(Error::Degenerate(format!("no connected prime G({n}, {p}) in {PRIME_RETRIES} tries")))
}

/// Clique on the first ⌈n/3⌉ vertices; every other vertex sees each clique
/// vertex with probability `density`, and at least one.
pub fn gen_split(n: usize, density: f64, seed: u64) -> Result<Graph> {
    need_n(n)?;
    let mut rng = SplitMix64::new(seed);
    let c = n.div_ceil(3);
    let mut edges = Vec::new();
    for i in 0..c {
        for j in i + 1..c {
            edges.push((i, j));
        }
    }
    for v in c..n {
        let forced = rng.index(c);
        for u in 0..c {
            if u == forced || rng.chance(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Hubs 0 and 1 are adjacent and every other vertex sees one or both of
/// them, so {0, 1} is a dominating edge. About density·n extra edges join
/// non-hub vertices.
pub fn gen_domedge(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument("dominating edge needs n >= 2".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        match rng.index(3) {
            0 => edges.push((0, v)),
            1 => edges.push((1, v)),
            _ => {
                edges.push((0, v));
                edges.push((1, v));
            }
        }
    }
    if n > 3 {
        let extra = (density * n as f64) as usize;
        for _ in 0..extra {
            let a = 2 + rng.index(n - 2);
            let b = 2 + rng.index(n - 2);
            if a != b {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges_dedup(n, &edges)
}
