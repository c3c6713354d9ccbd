//! Modules, twins, maximal strong modules and the quotient graph.
//!
//! Maximal strong modules of a connected graph with connected complement
//! are found from the maximal modules avoiding one vertex `v` (partition
//! refinement) plus a forcing digraph on those modules: a module containing
//! `v` and `X` must also contain every `Y` that sees `X` and `v`
//! differently.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::{Place, VertexPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleWitness {
    pub set: Vec<usize>,
    pub is_module: bool,
    /// Outside vertex adjacent to some but not all of the set.
    pub splitter: Option<usize>,
}

pub fn is_module(g: &Graph, m: &VertexSet) -> Result<ModuleWitness> {
    if m.is_empty() {
        return Err(Error::InvalidArgument("empty vertex set".into()));
    }
    let mut count = vec![0usize; g.n()];
    for x in m.iter() {
        for w in g.neighbors(x) {
            count[w] += 1;
        }
    }
    let splitter = (0..g.n()).find(|&y| !m.contains(y) && count[y] > 0 && count[y] < m.len());
    Ok(ModuleWitness { set: m.to_vec(), is_module: splitter.is_none(), splitter })
}

fn refine_by_all(g: &Graph, closed: bool) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut p = VertexPartition::from_groups(n, [0..n]);
    for v in 0..n {
        if closed {
            p.refine(g.neighbors(v).chain([v]), Place::After, None);
        } else {
            p.refine(g.neighbors(v), Place::After, None);
        }
    }
    p.groups()
}

/// Classes of the twin relation N(u)\{v} = N(v)\{u}, sorted by smallest
/// member. Refining by every closed neighbourhood yields true-twin classes,
/// refining by every open one false-twin classes; a vertex never has both
/// kinds of twin.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for grp in refine_by_all(g, true).into_iter().chain(refine_by_all(g, false)) {
        if grp.len() > 1 && grp.iter().all(|&v| class[v] == usize::MAX) {
            for &v in &grp {
                class[v] = classes.len();
            }
            classes.push(grp);
        }
    }
    for v in 0..n {
        if class[v] == usize::MAX {
            class[v] = classes.len();
            classes.push(vec![v]);
        }
    }
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    classes.sort();
    classes
}

/// Connected components of the complement, in O(n + m).
pub fn co_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut mark = vec![usize::MAX; n];
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut comps = Vec::new();
    remaining.reverse();
    while let Some(s) = remaining.pop() {
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for w in g.neighbors(x) {
                mark[w] = x;
            }
            let mut keep = Vec::with_capacity(remaining.len());
            for &y in &remaining {
                if mark[y] == x {
                    keep.push(y);
                } else {
                    comp.push(y);
                    queue.push_back(y);
                }
            }
            remaining = keep;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Partition of V \ {v} into the maximal modules not containing `v`.
pub fn maximal_modules_avoiding(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let rest: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    let mut part = VertexPartition::from_groups(n, [vec![v], rest]);
    let mut queued = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(y) = queue.pop_front() {
        queued[y] = false;
        let own = part.group_of(y);
        for (a, b) in part.refine(g.neighbors(y), Place::After, own) {
            let members: Vec<usize> = part.members(a).chain(part.members(b)).collect();
            for z in members {
                if !queued[z] {
                    queued[z] = true;
                    queue.push_back(z);
                }
            }
        }
    }
    part.groups().into_iter().filter(|grp| grp != &[v]).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuotientKind {
    /// A single vertex.
    Single,
    /// G disconnected: classes are the components.
    Disconnected,
    /// Complement disconnected: classes are its components and the
    /// quotient is complete.
    CoDisconnected,
    /// G and its complement connected: the quotient is prime.
    Prime,
}

/// Maximal strong modules, each sorted, ordered by smallest member.
pub fn maximal_strong_modules(g: &Graph) -> (Vec<Vec<usize>>, QuotientKind) {
    let n = g.n();
    if n <= 1 {
        return ((0..n).map(|v| vec![v]).collect(), QuotientKind::Single);
    }
    if !g.is_connected() {
        let comps = crate::graph::components_after_removing(g, &VertexSet::new(n));
        return (comps.iter().map(|c| c.to_vec()).collect(), QuotientKind::Disconnected);
    }
    let co = co_components(g);
    if co.len() > 1 {
        let mut co = co;
        co.sort();
        return (co, QuotientKind::CoDisconnected);
    }
    let v = 0;
    let parts = maximal_modules_avoiding(g, v);
    let p = parts.len();
    let mut part_of = vec![p; n];
    for (i, grp) in parts.iter().enumerate() {
        for &x in grp {
            part_of[x] = i;
        }
    }
    let words = (p + 1).div_ceil(64);
    let mut rows = vec![0u64; (p + 1) * words];
    for i in 0..=p {
        let rep = if i == p { v } else { parts[i][0] };
        for w in g.neighbors(rep) {
            let j = part_of[w];
            rows[i * words + j / 64] |= 1 << (j % 64);
        }
    }
    // arcs X -> Y when Y is adjacent to exactly one of X and v
    let successors = |i: usize| -> Vec<usize> {
        let mut out = Vec::new();
        for k in 0..words {
            let mut bits = rows[i * words + k] ^ rows[p * words + k];
            while bits != 0 {
                let j = k * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if j < p && j != i {
                    out.push(j);
                }
            }
        }
        out
    };
    let adj: Vec<Vec<usize>> = (0..p).map(successors).collect();
    let comp = strongly_connected(&adj);
    let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut has_in = vec![false; ncomp];
    for (i, succ) in adj.iter().enumerate() {
        for &j in succ {
            if comp[i] != comp[j] {
                has_in[comp[j]] = true;
            }
        }
    }
    let sources: Vec<usize> = (0..ncomp).filter(|&c| !has_in[c]).collect();
    assert_eq!(sources.len(), 1, "forcing digraph must have one source component");
    let src = sources[0];
    let mut modules = Vec::new();
    let mut with_v = vec![v];
    for (i, grp) in parts.into_iter().enumerate() {
        if comp[i] == src {
            modules.push(grp);
        } else {
            with_v.extend(grp);
        }
    }
    with_v.sort_unstable();
    modules.push(with_v);
    modules.sort();
    (modules, QuotientKind::Prime)
}

/// Iterative Tarjan; returns the component index of every node.
fn strongly_connected(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    let mut ncomp = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut it)) = call.last_mut() {
            if *it < adj[v].len() {
                let w = adj[v][*it];
                *it += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    comp
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeVerdict {
    pub prime: bool,
    /// A nontrivial module when not prime.
    pub module: Option<Vec<usize>>,
}

pub fn is_prime(g: &Graph) -> PrimeVerdict {
    if g.n() <= 2 {
        return PrimeVerdict { prime: true, module: None };
    }
    let (classes, kind) = maximal_strong_modules(g);
    if let Some(big) = classes.iter().filter(|c| c.len() > 1).max_by_key(|c| c.len()) {
        return PrimeVerdict { prime: false, module: Some(big.clone()) };
    }
    match kind {
        QuotientKind::Prime => PrimeVerdict { prime: true, module: None },
        // edgeless or complete on at least three vertices
        _ => PrimeVerdict { prime: false, module: Some(vec![classes[0][0], classes[1][0]]) },
    }
}

/// The graph on maximal strong modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub quotient: Graph,
    pub classes: Vec<Vec<usize>>,
    pub representative: Vec<usize>,
    pub class_of: Vec<usize>,
    pub kind: QuotientKind,
}

impl QuotientGraph {
    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }
}

pub fn quotient_graph(g: &Graph) -> Result<QuotientGraph> {
    g.check_connected()?;
    let (classes, kind) = maximal_strong_modules(g);
    let mut class_of = vec![0; g.n()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let representative: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let mut edges = Vec::new();
    for (i, &r) in representative.iter().enumerate() {
        for w in g.neighbors(r) {
            let j = class_of[w];
            if i < j {
                edges.push((i, j));
            }
        }
    }
    let quotient = Graph::from_edges_dedup(classes.len(), &edges)?;
    Ok(QuotientGraph { quotient, classes, representative, class_of, kind })
}

/// Largest distance from `v` to another member of its class (0, 1 or 2;
/// two nonadjacent members share every outside neighbor).
fn intra_class_ecc(g: &Graph, members: &[usize], v: usize) -> u32 {
    if members.len() == 1 {
        0
    } else if members.iter().all(|&w| w == v || g.has_edge(v, w)) {
        1
    } else {
        2
    }
}

/// Eccentricities of `g` from those of its quotient.
pub fn lift_eccentricities(g: &Graph, q: &QuotientGraph, quotient_ecc: &[u32]) -> Vec<u32> {
    (0..g.n())
        .map(|v| match q.kind {
            QuotientKind::Single => 0,
            QuotientKind::CoDisconnected => {
                if g.is_universal(v) {
                    1
                } else {
                    2
                }
            }
            _ => {
                let c = q.class_of[v];
                quotient_ecc[c].max(intra_class_ecc(g, &q.classes[c], v))
            }
        })
        .collect()
}

/// Lifts a vertex pair of the quotient to representatives.
pub fn lift_pair(q: &QuotientGraph, pair: (usize, usize)) -> (usize, usize) {
    (q.representative[pair.0], q.representative[pair.1])
}
