use super::params::UniformStructure;
use crate::error::Result;
use crate::graph_core::{bfs_layers, DistancePartition, Graph};
use crate::rational::q;
use crate::terwilliger::{flatten, lfr_split, LfrSplit, Op, SparseBinary};
use num_traits::Zero;
use std::collections::BTreeMap;

type Sparse = BTreeMap<usize, i64>;

/// `M v` for a sparse `v`, reading columns of `M` as rows of `Mᵀ`.
fn apply(transpose: &SparseBinary, v: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (&y, &x) in v {
        for &z in transpose.row(y) {
            *out.entry(z).or_insert(0) += x;
        }
    }
    out.retain(|_, x| *x != 0);
    out
}

fn apply_word(split: &LfrSplit, w: &[Op], v: &Sparse) -> Sparse {
    let mut cur = v.clone();
    for op in w.iter().rev() {
        // L's columns are R's rows and vice versa; F is symmetric.
        let t = match op {
            Op::L => &split.r,
            Op::R => &split.l,
            Op::F => &split.f,
        };
        cur = apply(t, &cur);
    }
    cur
}

/// Checks `e_i⁻ RL² + LRL + e_i⁺ L²R = f_i L` on every basis vector of every
/// `E*_iV`, `1 <= i <= ε`, using the global sparse split.
pub fn verify_given(split: &LfrSplit, dp: &DistancePartition, us: &UniformStructure) -> bool {
    let eps = dp.eccentricity();
    if us.epsilon() != eps || us.f.len() != eps {
        return false;
    }
    let words = [[Op::R, Op::L, Op::L], [Op::L, Op::R, Op::L], [Op::L, Op::L, Op::R]];
    for i in 1..=eps {
        let (em, ep, f) = (us.u.e_minus(i), us.u.e_plus(i), &us.f[i - 1]);
        for &y in dp.layer(i) {
            let e: Sparse = [(y, 1)].into_iter().collect();
            let [rll, lrl, llr] = words.map(|w| apply_word(split, &w, &e));
            let l = apply_word(split, &[Op::L], &e);
            let support: std::collections::BTreeSet<usize> =
                rll.keys().chain(lrl.keys()).chain(llr.keys()).chain(l.keys()).copied().collect();
            for z in support {
                let get = |m: &Sparse| q(m.get(&z).copied().unwrap_or(0));
                let value = em * get(&rll) + get(&lrl) + ep * get(&llr) - f * get(&l);
                if !value.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// [`verify_given`] on the flattened graph of `g` at base `x`.
pub fn verify_on_graph(g: &Graph, x: usize, us: &UniformStructure) -> Result<bool> {
    let dp = bfs_layers(g, x)?;
    let flat = flatten(g, x)?;
    Ok(verify_given(&lfr_split(&flat.graph, &dp), &dp, us))
}
