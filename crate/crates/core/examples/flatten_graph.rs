//! Flatten D(1,1) and H(3,4) at a base vertex and compare the results.
use drg_uniform::families::{doob, hamming};
use drg_uniform::terwilliger::{flatten, graph_isomorphic, DEFAULT_ISO_LIMIT};

fn main() -> drg_uniform::Result<()> {
    let d = flatten(&doob(1, 1, 1000)?, 0)?;
    let h = flatten(&hamming(3, 4, 1000)?, 0)?;
    for (name, f) in [("D(1,1)", &d), ("H(3,4)", &h)] {
        println!(
            "{name}: removed {} same-layer edges, bipartition {:?}, bipartite: {}",
            f.removed_edges.len(),
            f.bipartition_sizes,
            f.graph.is_bipartite()
        );
    }
    let iso = graph_isomorphic(&d.graph, &h.graph, DEFAULT_ISO_LIMIT)?;
    println!("flattened graphs isomorphic: {}", iso.is_some());
    Ok(())
}
