#![allow(clippy::needless_range_loop)]

mod common;

use common::*;
use drg_uniform::families::{doob, hamming};
use drg_uniform::graph_core::{bfs_layers, Graph};
use drg_uniform::terwilliger::*;
use proptest::prelude::*;

/// `A = L + F + R`, `R = Lᵀ`, `F = Fᵀ`, and each part moves exactly one layer (or none).
fn check_split(g: &Graph, x: usize) {
    let dp = bfs_layers(g, x).unwrap();
    let s = lfr_split(g, &dp);
    let a = dense_adjacency(g);
    for y in 0..g.n() {
        for z in 0..g.n() {
            let (l, f, r) = (s.l.get(y, z), s.f.get(y, z), s.r.get(y, z));
            assert_eq!(a[y][z], l as i64 + f as i64 + r as i64, "A = L + F + R at ({y},{z})");
            assert_eq!(r, s.l.get(z, y), "R = Lᵀ");
            assert_eq!(f, s.f.get(z, y), "F symmetric");
            let (ly, lz) = (dp.layer_of[y], dp.layer_of[z]);
            assert!(!l || lz == ly + 1, "L lowers by one layer");
            assert!(!r || ly == lz + 1, "R raises by one layer");
            assert!(!f || ly == lz, "F preserves layers");
        }
    }
    assert_eq!(s.adjacency(), SparseBinary::from_rows((0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()));
}

/// `Σ E*_i = I` and `E*_i E*_j = δ_ij E*_i` on diagonals.
fn check_dual_idempotents(g: &Graph, x: usize) {
    let dp = bfs_layers(g, x).unwrap();
    let es = DualIdempotents::new(&dp);
    let diags: Vec<Vec<u8>> = (0..es.len()).map(|i| es.diagonal(i)).collect();
    for v in 0..g.n() {
        assert_eq!(diags.iter().map(|d| d[v] as usize).sum::<usize>(), 1);
        for i in 0..diags.len() {
            for j in 0..diags.len() {
                let prod = diags[i][v] * diags[j][v];
                assert_eq!(prod, if i == j { diags[i][v] } else { 0 });
            }
        }
    }
}

/// `Γ_f` is bipartite, connected and keeps every distance from the base.
fn check_flatten(g: &Graph, x: usize) {
    let fl = flatten(g, x).unwrap();
    assert!(fl.graph.is_bipartite());
    assert!(fl.graph.is_connected());
    let before = all_distances(g);
    let after = all_distances(&fl.graph);
    assert_eq!(before[x], after[x]);
    assert_eq!(fl.graph.num_edges() + fl.removed_edges.len(), g.num_edges());
    let even = before[x].iter().filter(|d| *d % 2 == 0).count();
    assert_eq!(fl.bipartition_sizes, (even, g.n() - even));
}

#[test]
fn identities_on_families() {
    for (name, g) in small_families() {
        for x in [0, g.n() / 2, g.n() - 1] {
            eprintln!("{name} base {x}");
            check_split(&g, x);
            check_dual_idempotents(&g, x);
            check_flatten(&g, x);
        }
    }
}

#[test]
fn flattened_doob_matches_flattened_hamming() {
    let d = flatten(&doob(1, 1, 1000).unwrap(), 0).unwrap().graph;
    let h = flatten(&hamming(3, 4, 1000).unwrap(), 0).unwrap().graph;
    assert!(graph_isomorphic(&d, &h, DEFAULT_ISO_LIMIT).unwrap().is_some());
    // The unflattened graphs are cospectral mates but not isomorphic.
    let dd = doob(1, 1, 1000).unwrap();
    let hh = hamming(3, 4, 1000).unwrap();
    assert!(graph_isomorphic(&dd, &hh, DEFAULT_ISO_LIMIT).unwrap().is_none());
}

#[test]
fn isomorphism_witness_is_a_relabelling() {
    let g = hamming(3, 3, 1000).unwrap();
    let perm: Vec<usize> = (0..g.n()).map(|v| (v * 5 + 3) % g.n()).collect();
    let h = g.relabel(&perm);
    let p = graph_isomorphic(&g, &h, DEFAULT_ISO_LIMIT).unwrap().unwrap();
    assert_eq!(g.relabel(&p), h);
}

#[test]
fn cartesian_product_of_cliques_is_a_hamming_graph() {
    let k3 = Graph::complete(3);
    let k9 = cartesian_product(&k3, &k3, 1000).unwrap();
    let h = hamming(2, 3, 1000).unwrap();
    assert!(graph_isomorphic(&k9, &h, DEFAULT_ISO_LIMIT).unwrap().is_some());
    assert!(cartesian_product(&k9, &k9, 10).is_err());
}

fn arb_connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..14).prop_flat_map(|n| {
        (proptest::collection::vec(0usize..n, n - 1), proptest::collection::vec((0usize..n, 0usize..n), 0..2 * n))
            .prop_map(move |(parents, extra)| {
                let mut edges = std::collections::BTreeSet::new();
                for v in 1..n {
                    let p = parents[v - 1] % v;
                    edges.insert((p, v));
                }
                for (a, b) in extra {
                    if a != b {
                        edges.insert((a.min(b), a.max(b)));
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn split_and_flatten_on_random_graphs(g in arb_connected_graph(), x in 0usize..14) {
        let x = x % g.n();
        check_split(&g, x);
        check_dual_idempotents(&g, x);
        check_flatten(&g, x);
    }
}
