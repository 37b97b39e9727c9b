use crate::error::Result;
use crate::families::check_budget;
use crate::graph_core::{bfs_layers, Graph};
use serde::Serialize;

/// `Γ_f`: the graph with every edge inside a layer around `base` removed.
#[derive(Clone, Debug)]
pub struct FlattenedGraph {
    pub graph: Graph,
    pub base: usize,
    /// Sizes of the even-layer and odd-layer classes.
    pub bipartition_sizes: (usize, usize),
    /// The removed same-layer edges, as `(u, v)` with `u < v`.
    pub removed_edges: Vec<(usize, usize)>,
}

/// JSON sidecar written next to a flattened edge list.
#[derive(Clone, Debug, Serialize)]
pub struct FlattenReport {
    pub base: usize,
    pub bipartition_sizes: [usize; 2],
    pub removed_edges: usize,
}

impl FlattenedGraph {
    pub fn report(&self) -> FlattenReport {
        FlattenReport {
            base: self.base,
            bipartition_sizes: [self.bipartition_sizes.0, self.bipartition_sizes.1],
            removed_edges: self.removed_edges.len(),
        }
    }
}

pub fn flatten(g: &Graph, x: usize) -> Result<FlattenedGraph> {
    let dp = bfs_layers(g, x)?;
    let mut kept = Vec::new();
    let mut removed = Vec::new();
    for (u, v) in g.edges() {
        if dp.layer_of[u] == dp.layer_of[v] {
            removed.push((u, v));
        } else {
            kept.push((u, v));
        }
    }
    let even = dp.layer_of.iter().filter(|&&l| l % 2 == 0).count();
    Ok(FlattenedGraph {
        graph: Graph::from_edges(g.n(), kept)?,
        base: x,
        bipartition_sizes: (even, g.n() - even),
        removed_edges: removed,
    })
}

/// Cartesian product `G □ H` on pairs `(a, b)`, numbered `a |H| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph, budget: usize) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    check_budget(ng as u128 * nh as u128, budget)?;
    Ok(Graph::from_fn(ng * nh, |v| {
        let (a, b) = (v / nh, v % nh);
        g.neighbors(a)
            .iter()
            .map(|&a2| a2 * nh + b)
            .chain(h.neighbors(b).iter().map(|&b2| a * nh + b2))
            .collect()
    }))
}
