use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::VecDeque;

/// Finite simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidParams(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(format!("duplicate edge at vertex {u}")));
            }
        }
        Ok(Self { adj })
    }

    /// Builds a graph from a symmetric neighbour oracle; used by constructors.
    pub(crate) fn from_fn(n: usize, mut neighbours: impl FnMut(usize) -> Vec<usize>) -> Self {
        let adj = (0..n)
            .map(|u| {
                let mut list = neighbours(u);
                list.sort_unstable();
                list.dedup();
                list
            })
            .collect();
        let g = Self { adj };
        debug_assert!(g.is_symmetric());
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn is_symmetric(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(u, list)| list.iter().all(|&v| v != u && self.adjacent(v, u)))
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || bfs_distances(self, 0).iter().all(Option::is_some)
    }

    /// Two-colouring, if one exists (assumes connectivity only for the colouring order).
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![None; self.n()];
        for s in 0..self.n() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &v in &self.adj[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Self { adj }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |u| (0..n).filter(|&v| v != u).collect())
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_fn(n, |u| vec![(u + 1) % n, (u + n - 1) % n])
    }

    pub fn path(n: usize) -> Self {
        Self::from_fn(n, |u| {
            let mut v = Vec::new();
            if u > 0 {
                v.push(u - 1);
            }
            if u + 1 < n {
                v.push(u + 1);
            }
            v
        })
    }
}

pub(crate) fn bfs_distances(g: &Graph, x: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[x] = Some(0);
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// The layers `Γ_i(x)` around a base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistancePartition {
    pub base: usize,
    pub layer_of: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
    /// Position of each vertex inside its (sorted) layer.
    pub index_in_layer: Vec<usize>,
}

impl DistancePartition {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn n(&self) -> usize {
        self.layer_of.len()
    }
}

pub fn bfs_layers(g: &Graph, x: usize) -> Result<DistancePartition> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    let dist = bfs_distances(g, x);
    let mut layer_of = Vec::with_capacity(g.n());
    for (v, d) in dist.iter().enumerate() {
        match d {
            Some(d) => layer_of.push(*d),
            None => return Err(Error::DisconnectedGraph { base: x, unreachable: v }),
        }
    }
    let ecc = layer_of.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); ecc + 1];
    let mut index_in_layer = vec![0; g.n()];
    for (v, &d) in layer_of.iter().enumerate() {
        index_in_layer[v] = layers[d].len();
        layers[d].push(v);
    }
    Ok(DistancePartition { base: x, layer_of, layers, index_in_layer })
}

/// All-pairs path-length distances, stored densely.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        let mut d = vec![0u16; n * n];
        for x in 0..n {
            let p = bfs_layers(g, x)?;
            for (y, &l) in p.layer_of.iter().enumerate() {
                d[x * n + y] = l as u16;
            }
        }
        Ok(Self { n, d })
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.d[x * self.n + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u16] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0) as usize
    }
}
