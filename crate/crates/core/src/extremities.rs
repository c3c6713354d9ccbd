//! Extremities: vertices whose closed neighbourhood can be removed without
//! creating new components. Predicates, exhaustive oracles, and the search
//! for an extremity far from `u` outside a `u`-transitive set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{component_labels, Graph, VertexSet};
use crate::partition::{Place, VertexPartition};
use crate::search::{lexbfs, LexOrder};

pub fn is_extremity(g: &Graph, v: usize) -> bool {
    let (_, count) = component_labels(g, &g.closed_neighborhood(v));
    count <= 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremityReport {
    pub extremities: Vec<usize>,
    /// Largest set of pairwise nonadjacent extremities found.
    pub alpha: usize,
    /// False when `alpha` is only a greedy lower bound.
    pub alpha_exact: bool,
    pub q: usize,
    pub independent_witness: Vec<usize>,
}

/// Largest independent set size for which the exact search is used.
pub const EXACT_ALPHA_LIMIT: usize = 20;

pub fn all_extremities_oracle(g: &Graph) -> Result<ExtremityReport> {
    g.check_connected()?;
    let extremities: Vec<usize> = (0..g.n()).filter(|&v| is_extremity(g, v)).collect();
    let q = extremities.len();
    let (witness, alpha_exact) = if q <= EXACT_ALPHA_LIMIT {
        (max_independent_subset(g, &extremities), true)
    } else {
        (greedy_independent_subset(g, &extremities), false)
    };
    Ok(ExtremityReport { alpha: witness.len(), alpha_exact, q, extremities, independent_witness: witness })
}

/// Exact maximum independent subset of `vertices` (at most 64 of them).
pub fn max_independent_subset(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    assert!(vertices.len() <= 64);
    let k = vertices.len();
    let closed: Vec<u64> = (0..k)
        .map(|i| {
            (0..k).filter(|&j| j == i || g.has_edge(vertices[i], vertices[j])).fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    fn go(mask: u64, closed: &[u64], cur: u64, best: &mut (u32, u64)) {
        if mask == 0 {
            if cur.count_ones() > best.0 {
                *best = (cur.count_ones(), cur);
            }
            return;
        }
        if cur.count_ones() + mask.count_ones() <= best.0 {
            return;
        }
        let v = mask.trailing_zeros() as usize;
        go(mask & !closed[v], closed, cur | 1 << v, best);
        go(mask & !(1u64 << v), closed, cur, best);
    }
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut best = (0, 0);
    go(full, &closed, 0, &mut best);
    (0..k).filter(|&i| best.1 >> i & 1 == 1).map(|i| vertices[i]).collect()
}

/// Minimum-degree greedy independent subset of `vertices`.
pub fn greedy_independent_subset(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    let inside = VertexSet::from_iter(g.n(), vertices.iter().copied());
    let mut order: Vec<(usize, usize)> = vertices
        .iter()
        .map(|&v| (g.neighbors(v).filter(|&w| inside.contains(w)).count(), v))
        .collect();
    order.sort_unstable();
    let mut blocked = VertexSet::new(g.n());
    let mut out = Vec::new();
    for (_, v) in order {
        if !blocked.contains(v) {
            out.push(v);
            blocked.insert(v);
            for w in g.neighbors(v) {
                blocked.insert(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Number of colors used by first-fit coloring in id order.
pub fn greedy_coloring_count(g: &Graph) -> usize {
    let mut color = vec![usize::MAX; g.n()];
    let mut used = vec![usize::MAX; g.n() + 1];
    let mut count = 0;
    for v in 0..g.n() {
        for w in g.neighbors(v) {
            if color[w] != usize::MAX {
                used[color[w]] = v;
            }
        }
        let c = (0..).find(|&c| used[c] != v).unwrap();
        color[v] = c;
        count = count.max(c + 1);
    }
    count
}

/// The last vertex of a LexBFS from `start`; an extremity when `g` is
/// prime with at least three vertices.
pub fn first_extremity(g: &Graph, start: usize) -> Result<usize> {
    Ok(lexbfs(g, start)?.last())
}

/// A `u`-transitive vertex set: whenever `x` is in it and `x` is
/// separated from `u` by the closed neighbourhood of some `y`, `y` is too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitiveSet {
    pub anchor: usize,
    pub members: VertexSet,
}

impl TransitiveSet {
    /// N[H] for a connected `H` containing the anchor.
    pub fn closed_neighborhood_of(g: &Graph, anchor: usize, h: &VertexSet) -> TransitiveSet {
        TransitiveSet { anchor, members: g.closed_neighborhood_of(h) }
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        is_u_transitive_oracle(g, self.anchor, &self.members)
    }
}

/// An extremity `v` outside `S ∪ N[u]` maximizing `d(u, v)` over `V \ S`.
/// Requires a prime graph and a `u`-transitive `S`.
pub fn next_extremity(g: &Graph, u: usize, s: &VertexSet) -> Result<usize> {
    let ord = lexbfs(g, u)?;
    next_extremity_with_order(g, &ord, s)
}

/// As [`next_extremity`], reusing a LexBFS computed from `u`.
pub fn next_extremity_with_order(g: &Graph, ord: &LexOrder, s: &VertexSet) -> Result<usize> {
    let n = g.n();
    let u = ord.start();
    if s.universe() != n {
        return Err(Error::InvalidArgument("set universe differs from graph".into()));
    }
    // minimum-numbered vertex outside S; every vertex outside S is then at
    // distance at most d(u, w) from u
    let w = (1..=n).map(|i| ord.sigma(i)).find(|&v| !s.contains(v)).ok_or(Error::Exhausted)?;
    if w == u || g.has_edge(u, w) {
        return Err(Error::Exhausted);
    }
    let mut marked = vec![false; n];
    for x in g.neighbors(w) {
        marked[x] = true;
    }
    // largest i with N_≻(sigma(i)) ⊆ N(w), i.e. equal labels
    let lo = ord.number(w);
    let top = (lo..n)
        .rev()
        .find(|&i| ord.earlier_neighbors(g, ord.sigma(i)).all(|y| marked[y]))
        .expect("w itself qualifies");
    let m0: Vec<usize> = (lo..=top).map(|i| ord.sigma(i)).filter(|&v| !s.contains(v)).collect();
    if m0.len() == 1 {
        return Ok(m0[0]);
    }
    let mut part = VertexPartition::from_groups(n, [m0.clone()]);
    let mut pivots: Vec<usize> = s.to_vec();
    let mut count = vec![0usize; n];
    loop {
        for &x in &pivots {
            for y in g.neighbors(x) {
                if part.contains(y) {
                    count[y] += 1;
                }
            }
            part.refine(g.neighbors(x), Place::After, None);
        }
        let ids = part.group_ids();
        if ids.len() == 1 {
            let module: Vec<usize> = part.members(ids[0]).collect();
            return Err(Error::NotPrime(module));
        }
        let best = *ids
            .iter()
            .min_by_key(|&&id| {
                let rep = part.head(id);
                let min_id = part.members(id).min().unwrap();
                (count[rep], min_id)
            })
            .unwrap();
        pivots.clear();
        for id in ids {
            if id != best {
                pivots.extend(part.members(id));
            }
        }
        for &x in &pivots {
            part.remove(x);
        }
        let keep: Vec<usize> = part.members(best).collect();
        if keep.len() == 1 {
            return Ok(keep[0]);
        }
        for &x in &keep {
            count[x] = 0;
        }
    }
}

/// Exhaustive check of `u`-transitivity: no `x ∈ S` is separated from `u`
/// by the closed neighbourhood of a vertex `y ∉ S`.
pub fn is_u_transitive_oracle(g: &Graph, u: usize, s: &VertexSet) -> bool {
    for y in 0..g.n() {
        if s.contains(y) || y == u || g.has_edge(u, y) {
            continue;
        }
        let (label, _) = component_labels(g, &g.closed_neighborhood(y));
        for x in s.iter() {
            if label[x] != u32::MAX && label[x] != label[u] {
                return false;
            }
        }
    }
    true
}

/// Whether `u` and `v` lie in different components of G \ N[w].
pub fn separation_test(g: &Graph, u: usize, v: usize, w: usize) -> Result<bool> {
    for x in [u, v, w] {
        g.check_vertex(x)?;
    }
    for (a, b) in [(u, v), (u, w), (v, w)] {
        if a == b || g.has_edge(a, b) {
            return Err(Error::InvalidArgument(format!("{a} and {b} are not distinct and nonadjacent")));
        }
    }
    let (label, _) = component_labels(g, &g.closed_neighborhood(w));
    Ok(label[u] != label[v])
}

pub fn is_asteroidal_set(g: &Graph, a: &VertexSet) -> bool {
    let members = a.to_vec();
    for (i, &x) in members.iter().enumerate() {
        if members[i + 1..].iter().any(|&y| g.has_edge(x, y)) {
            return false;
        }
    }
    members.iter().all(|&x| {
        let (label, _) = component_labels(g, &g.closed_neighborhood(x));
        let mut rest = members.iter().filter(|&&y| y != x).map(|&y| label[y]);
        match rest.next() {
            None => true,
            Some(first) => rest.all(|l| l == first),
        }
    })
}

pub const ASTEROIDAL_CAP: usize = 100;
const ASTEROIDAL_BUDGET: usize = 20_000_000;

/// Largest asteroidal set, by backtracking over asteroidal sets (the
/// property is inherited by subsets). Refuses graphs above the size cap or
/// searches that exceed the node budget.
pub fn asteroidal_number_oracle(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > ASTEROIDAL_CAP {
        return Err(Error::CapExceeded { n, cap: ASTEROIDAL_CAP });
    }
    let labels: Vec<Vec<u32>> = (0..n).map(|x| component_labels(g, &g.closed_neighborhood(x)).0).collect();
    struct Search<'a> {
        g: &'a Graph,
        labels: Vec<Vec<u32>>,
        best: Vec<usize>,
        nodes: usize,
    }
    impl Search<'_> {
        fn fits(&self, cur: &[usize], b: usize) -> bool {
            let lb = &self.labels[b];
            if cur.iter().any(|&a| a == b || self.g.has_edge(a, b) || lb[a] != lb[cur[0]]) {
                return false;
            }
            cur.iter().all(|&a| {
                let la = &self.labels[a];
                cur.iter().filter(|&&o| o != a).all(|&o| la[o] == la[b])
            })
        }
        fn go(&mut self, cur: &mut Vec<usize>, from: usize) -> bool {
            self.nodes += 1;
            if self.nodes > ASTEROIDAL_BUDGET {
                return false;
            }
            if cur.len() > self.best.len() {
                self.best = cur.clone();
            }
            let n = self.g.n();
            if cur.len() + (n - from) <= self.best.len() {
                return true;
            }
            for b in from..n {
                if self.fits(cur, b) {
                    cur.push(b);
                    let ok = self.go(cur, b + 1);
                    cur.pop();
                    if !ok {
                        return false;
                    }
                }
            }
            true
        }
    }
    let mut s = Search { g, labels, best: Vec::new(), nodes: 0 };
    if !s.go(&mut Vec::new(), 0) {
        return Err(Error::CapExceeded { n, cap: ASTEROIDAL_CAP });
    }
    Ok(s.best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    True,
    False,
    Unknown,
}

pub const DOMINATING_TARGET_CAP: usize = 5000;

/// Whether every connected subgraph containing `D` dominates the graph.
///
/// Decided exactly via: some connected subgraph containing `D` misses the
/// closed neighbourhood of `x` iff `D` avoids N[x] and lies inside one
/// component of G \ N[x]. Above the size cap the answer is `Unknown`.
pub fn is_dominating_target(g: &Graph, d: &VertexSet) -> Verdict {
    if d.is_empty() {
        return Verdict::False;
    }
    if g.n() > DOMINATING_TARGET_CAP {
        return Verdict::Unknown;
    }
    let members = d.to_vec();
    for x in 0..g.n() {
        let (label, _) = component_labels(g, &g.closed_neighborhood(x));
        let first = label[members[0]];
        if first != u32::MAX && members.iter().all(|&y| label[y] == first) {
            return Verdict::False;
        }
    }
    Verdict::True
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::graph::bfs;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    #[test]
    fn predicates() {
        assert!(is_extremity(&path(4), 0));
        assert!(!is_extremity(&spider3(), 0));
        assert!(!is_extremity(&star(3), 1));
    }

    #[test]
    fn oracle_reports() {
        let r = all_extremities_oracle(&spider3()).unwrap();
        assert_eq!((r.extremities.clone(), r.alpha, r.q), (vec![2, 4, 6], 3, 3));
        let r = all_extremities_oracle(&path(4)).unwrap();
        assert_eq!((r.q, r.alpha), (4, 2));
        let r = all_extremities_oracle(&cycle(6)).unwrap();
        assert_eq!((r.q, r.alpha, r.alpha_exact), (6, 3, true));
    }

    #[test]
    fn first_extremities() {
        assert_eq!(first_extremity(&path(4), 0).unwrap(), 3);
        assert!([2, 4, 6].contains(&first_extremity(&spider3(), 0).unwrap()));
        let p = petersen();
        assert!(is_extremity(&p, first_extremity(&p, 0).unwrap()));
    }

    #[test]
    fn next_extremity_examples() {
        let s = spider3();
        let v = next_extremity(&s, 2, &VertexSet::new(7)).unwrap();
        assert!([4, 6].contains(&v));
        assert_eq!(bfs(&s, 2).unwrap().at(v), 4);

        let excl = set(7, &[0, 1, 3, 5, 2]);
        assert!(is_u_transitive_oracle(&s, 0, &excl));
        assert!([4, 6].contains(&next_extremity(&s, 0, &excl).unwrap()));

        let p = path(5);
        assert!([0, 4].contains(&next_extremity(&p, 2, &VertexSet::new(5)).unwrap()));
        assert_eq!(next_extremity(&p, 2, &set(5, &[0, 4])), Err(Error::Exhausted));
    }

    #[test]
    fn next_extremity_detects_modules() {
        // P3: the two ends form a module that never splits
        let r = next_extremity(&path(3), 1, &VertexSet::new(3));
        assert_eq!(r, Err(Error::Exhausted));
        let c4 = cycle(4);
        assert!(matches!(next_extremity(&c4, 0, &VertexSet::new(4)), Ok(2)));
    }

    #[test]
    fn transitivity() {
        let c = cycle(6);
        // G \ N[4] = {0,1,2} is connected, so nothing separates 2 from 0
        assert!(is_u_transitive_oracle(&c, 0, &set(6, &[2])));
        // N[2] separates 4 from 0 on the path, and 2 is outside the set
        assert!(!is_u_transitive_oracle(&path(5), 0, &set(5, &[4])));
        assert!(is_u_transitive_oracle(&path(5), 0, &set(5, &[2, 3, 4])));
        assert!(is_u_transitive_oracle(&c, 0, &c.closed_neighborhood(0)));
    }

    #[test]
    fn separations() {
        assert!(separation_test(&path(5), 0, 4, 2).unwrap());
        assert!(!separation_test(&cycle(6), 0, 4, 2).unwrap());
        assert!(separation_test(&spider3(), 2, 4, 0).unwrap());
        assert!(separation_test(&path(5), 0, 1, 3).is_err());
    }

    #[test]
    fn asteroidal() {
        let s = spider3();
        assert!(is_asteroidal_set(&s, &set(7, &[2, 4, 6])));
        assert_eq!(asteroidal_number_oracle(&s).unwrap().len(), 3);
        assert!(!is_asteroidal_set(&complete(4), &set(4, &[0, 1])));
        assert_eq!(asteroidal_number_oracle(&path(6)).unwrap().len(), 2);
    }

    #[test]
    fn dominating_targets() {
        assert_eq!(is_dominating_target(&spider3(), &set(7, &[2, 4, 6])), Verdict::True);
        assert_eq!(is_dominating_target(&path(5), &set(5, &[0, 4])), Verdict::True);
        assert_eq!(is_dominating_target(&cycle(6), &set(6, &[0])), Verdict::False);
        assert_eq!(is_dominating_target(&spider3(), &set(7, &[2, 4])), Verdict::False);
    }

    #[test]
    fn independent_sets() {
        let c = cycle(7);
        let all: Vec<usize> = (0..7).collect();
        assert_eq!(max_independent_subset(&c, &all).len(), 3);
        assert!(greedy_independent_subset(&c, &all).len() <= 3);
        assert_eq!(greedy_coloring_count(&complete(4)), 4);
        assert_eq!(greedy_coloring_count(&path(5)), 2);
    }
}
