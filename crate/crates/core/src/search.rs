//! LexBFS by partition refinement, label inspection, double sweep and
//! chordality recognition.

use crate::error::{Error, Result};
use crate::graph::{bfs_raw, Graph};
use crate::partition::{Place, VertexPartition};

/// A LexBFS numbering. Vertices are numbered `n` down to `1` in visit
/// order, so `sigma(n)` is the start and `sigma(1)` the last visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexOrder {
    order: Vec<usize>,
    number: Vec<usize>,
}

impl LexOrder {
    /// Wraps a visit order (first visited first); checks it is a permutation.
    pub fn from_visit_order(order: Vec<usize>) -> Result<LexOrder> {
        let n = order.len();
        let mut number = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if number[v] != 0 {
                return Err(Error::InvalidArgument(format!("vertex {v} appears twice")));
            }
            number[v] = n - pos;
        }
        Ok(LexOrder { order, number })
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Vertex carrying number `i` (1-indexed).
    pub fn sigma(&self, i: usize) -> usize {
        self.order[self.n() - i]
    }

    /// Number of `v`, in `1..=n`.
    pub fn number(&self, v: usize) -> usize {
        self.number[v]
    }

    pub fn start(&self) -> usize {
        self.order[0]
    }

    /// The last vertex visited, `sigma(1)`.
    pub fn last(&self) -> usize {
        *self.order.last().unwrap()
    }

    pub fn visit_order(&self) -> &[usize] {
        &self.order
    }

    /// Neighbors of `v` numbered after it was visited, i.e. with a larger
    /// number.
    pub fn earlier_neighbors<'a>(&'a self, g: &'a Graph, v: usize) -> impl Iterator<Item = usize> + 'a {
        let k = self.number[v];
        g.neighbors(v).filter(move |&w| self.number[w] > k)
    }
}

/// LexBFS from `start`, breaking ties by smallest vertex id.
pub fn lexbfs(g: &Graph, start: usize) -> Result<LexOrder> {
    lexbfs_counted(g, start).map(|(o, _)| o)
}

/// LexBFS that also reports how many vertex and edge touches it made.
pub fn lexbfs_counted(g: &Graph, start: usize) -> Result<(LexOrder, usize)> {
    g.check_vertex(start)?;
    let n = g.n();
    let mut part = VertexPartition::from_groups(n, [0..n]);
    let mut reached = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut work = n;
    for step in 0..n {
        let v = if step == 0 {
            start
        } else {
            let v = part.head(part.first_group().unwrap());
            if !reached[v] {
                return Err(Error::Disconnected(start, v));
            }
            v
        };
        part.remove(v);
        order.push(v);
        work += g.degree(v);
        for w in g.neighbors(v) {
            reached[w] = true;
        }
        part.refine(g.neighbors(v), Place::Before, None);
    }
    reached[start] = true;
    Ok((LexOrder::from_visit_order(order).unwrap(), work))
}

/// Replays the refinement and checks that each visited vertex belonged to
/// the class of maximum label at its step.
pub fn verify_lexorder(g: &Graph, ord: &LexOrder) -> bool {
    let n = g.n();
    if ord.n() != n {
        return false;
    }
    let mut part = VertexPartition::from_groups(n, [0..n]);
    for (step, &v) in ord.visit_order().iter().enumerate() {
        if step > 0 && part.group_of(v) != part.first_group() {
            return false;
        }
        part.remove(v);
        part.refine(g.neighbors(v), Place::Before, None);
    }
    true
}

/// λ(u, v): numbers of the neighbors of `u` numbered before `v` (larger
/// numbers), in decreasing order. Meant for tests and debugging.
pub fn label(g: &Graph, ord: &LexOrder, u: usize, v: usize) -> Vec<usize> {
    let k = ord.number(v);
    let mut l: Vec<usize> = g.neighbors(u).map(|w| ord.number(w)).filter(|&x| x > k).collect();
    l.sort_unstable_by(|a, b| b.cmp(a));
    l
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSweep {
    pub x1: usize,
    pub x2: usize,
    pub c: usize,
    /// d(x1, x2)
    pub dist: u32,
}

/// Two LexBFS sweeps (from vertex 0, then from the first endpoint) and the
/// midpoint `c` of a shortest path between the two endpoints, at distance
/// ⌊d/2⌋ from `x1`.
pub fn double_sweep(g: &Graph) -> Result<DoubleSweep> {
    if g.n() < 2 {
        return Err(Error::Degenerate(format!("double sweep needs n >= 2, got {}", g.n())));
    }
    let x1 = lexbfs(g, 0)?.last();
    let x2 = lexbfs(g, x1)?.last();
    let d2 = bfs_raw(g, &[x2]);
    let dist = d2[x1];
    let mut c = x1;
    for _ in 0..dist / 2 {
        c = g.neighbors(c).find(|&w| d2[w] + 1 == d2[c]).unwrap();
    }
    Ok(DoubleSweep { x1, x2, c, dist })
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    let nb = g.adj(v);
    nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a as usize, b as usize)))
}

/// Returns the LexBFS order from vertex 0 when it is a perfect elimination
/// ordering (sigma(1) first), which happens exactly for chordal graphs.
pub fn recognize_chordal(g: &Graph) -> Result<Option<LexOrder>> {
    let ord = lexbfs(g, 0)?;
    Ok(is_peo(g, &ord).then_some(ord))
}

/// Whether eliminating sigma(1), sigma(2), ... is a perfect elimination.
pub fn is_peo(g: &Graph, ord: &LexOrder) -> bool {
    (0..g.n()).all(|v| {
        let later: Vec<usize> = ord.earlier_neighbors(g, v).collect();
        let Some(&p) = later.iter().min_by_key(|&&w| ord.number(w)) else {
            return true;
        };
        later.iter().all(|&w| w == p || g.has_edge(p, w))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::graph::bfs;

    #[test]
    fn path_and_clique_orders() {
        let o = lexbfs(&path(5), 0).unwrap();
        assert_eq!(o.visit_order(), &[0, 1, 2, 3, 4]);
        assert_eq!(o.sigma(1), 4);
        assert_eq!(o.sigma(5), 0);
        assert_eq!(o.number(4), 1);
        let o = lexbfs(&complete(4), 0).unwrap();
        assert_eq!(o.visit_order(), &[0, 1, 2, 3]);
    }

    #[test]
    fn spider_last_vertex() {
        let o = lexbfs(&spider3(), 2).unwrap();
        assert!([4, 6].contains(&o.last()));
        assert!(verify_lexorder(&spider3(), &o));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(lexbfs(&g, 0), Err(Error::Disconnected(0, _))));
    }

    #[test]
    fn verify_rejects_bad_order() {
        let g = path(5);
        let bad = LexOrder::from_visit_order(vec![0, 4, 1, 2, 3]).unwrap();
        assert!(!verify_lexorder(&g, &bad));
        assert!(verify_lexorder(&g, &lexbfs(&g, 2).unwrap()));
    }

    #[test]
    fn double_sweeps() {
        let s = double_sweep(&path(5)).unwrap();
        assert_eq!((s.x1, s.x2, s.c), (4, 0, 2));
        let s = double_sweep(&complete(4)).unwrap();
        assert_eq!((s.dist, s.c), (1, s.x1));
        let g = cycle(6);
        let s = double_sweep(&g).unwrap();
        assert_eq!(s.dist, 3);
        assert_eq!(bfs(&g, s.x1).unwrap().at(s.c), 1);
        assert_eq!(bfs(&g, s.x2).unwrap().at(s.c), 2);
        assert!(double_sweep(&path(1)).is_err());
    }

    #[test]
    fn simplicial_and_chordal() {
        assert!(is_simplicial(&path(5), 0));
        assert!(!is_simplicial(&path(5), 2));
        assert!(recognize_chordal(&spider3()).unwrap().is_some());
        assert!(recognize_chordal(&cycle(6)).unwrap().is_none());
        assert!(recognize_chordal(&complete(5)).unwrap().is_some());
        assert!(recognize_chordal(&cycle(4)).unwrap().is_none());
    }

    #[test]
    fn labels() {
        let g = path(5);
        let o = lexbfs(&g, 0).unwrap();
        // vertex 2 has number 3; its neighbor 1 (number 4) was numbered first
        assert_eq!(label(&g, &o, 2, 2), vec![4]);
        assert_eq!(label(&g, &o, 3, 2), Vec::<usize>::new());
    }
}
