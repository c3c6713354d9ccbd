//! Small named graphs used in examples and tests.

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// K_{1,leaves} with center 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// Center 0 with `legs` paths of `len` vertices each; leg `i` is
/// `1 + i*len ..= (i+1)*len`, the last one being the leaf.
pub fn spider(legs: usize, len: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..legs {
        let mut prev = 0;
        for j in 0..len {
            let v = 1 + i * len + j;
            edges.push((prev, v));
            prev = v;
        }
    }
    Graph::from_edges(1 + legs * len, &edges).unwrap()
}

/// Three legs of length two: c=0, a1=1, a2=2, b1=3, b2=4, d1=5, d2=6.
pub fn spider3() -> Graph {
    spider(3, 2)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}
