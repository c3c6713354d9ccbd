//! Text formats: plain edge lists ("u v", 0-indexed, '#' comments) and
//! DIMACS-style files ("p edge n m" header, "e u v" lines, 1-indexed).

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_vertex(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse { line, msg: "expected two vertex ids".into() })?;
    tok.parse::<usize>()
        .map_err(|_| Error::Parse { line, msg: format!("invalid vertex id {tok:?}") })
}

fn finish(n: usize, mut edges: Vec<(usize, usize, usize)>) -> Result<Graph> {
    for &(u, v, line) in &edges {
        if u == v {
            return Err(Error::Parse { line, msg: format!("self-loop at vertex {u}") });
        }
    }
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            std::mem::swap(&mut e.0, &mut e.1);
        }
    }
    edges.sort_unstable();
    edges.dedup_by_key(|e| (e.0, e.1));
    let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e.0, e.1)).collect();
    Graph::from_edges(n, &pairs)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        let u = parse_vertex(toks.next(), line)?;
        let v = parse_vertex(toks.next(), line)?;
        if toks.next().is_some() {
            return Err(Error::Parse { line, msg: "trailing tokens".into() });
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v, line));
    }
    finish(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('c') || body.starts_with('#') {
            continue;
        }
        let mut toks = body.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Parse { line, msg: "duplicate header".into() });
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(Error::Parse { line, msg: "expected \"p edge n m\"".into() }),
                }
                header = Some(parse_vertex(toks.next(), line)?);
                parse_vertex(toks.next(), line)?;
            }
            Some("e") => {
                let n = header
                    .ok_or_else(|| Error::Parse { line, msg: "edge before header".into() })?;
                let u = parse_vertex(toks.next(), line)?;
                let v = parse_vertex(toks.next(), line)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(Error::Parse {
                            line,
                            msg: format!("vertex {x} outside 1..={n}"),
                        });
                    }
                }
                edges.push((u - 1, v - 1, line));
            }
            Some(other) => {
                return Err(Error::Parse { line, msg: format!("unexpected token {other:?}") })
            }
            None => {}
        }
    }
    let n = header.ok_or(Error::Parse { line: 0, msg: "missing \"p edge n m\" header".into() })?;
    finish(n, edges)
}

/// Picks DIMACS when a "p " header line is present, edge list otherwise.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let dimacs = text.lines().any(|l| l.trim_start().starts_with("p "));
    if dimacs {
        parse_dimacs(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn write_edge_list(g: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("# n={} m={}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
