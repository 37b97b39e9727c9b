//! Plain edge-list files: a header `n m`, then `m` lines `u v` with `u < v`.

use super::Graph;
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt::Write as _;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty input".into() })?;
    let nums = parse_pair(hline, header)?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        if u >= v {
            return Err(Error::Parse { line, message: format!("expected u < v, got {u} {v}") });
        }
        if v >= n {
            return Err(Error::Parse { line, message: format!("vertex {v} out of range (n = {n})") });
        }
        if !seen.insert((u, v)) {
            return Err(Error::Parse { line, message: format!("duplicate edge {u} {v}") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize)> {
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse { line, message: "expected two integers".into() })?
            .parse()
            .map_err(|e| Error::Parse { line, message: format!("{e}") })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse { line, message: "trailing tokens".into() });
    }
    Ok((a, b))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", g.n(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}
