use super::decompose::{Algebra, ModuleDescriptor};
use crate::error::{Error, Result};
use crate::graph_core::PrimitiveIdempotents;
use crate::linalg::{dot, is_zero_vec};
use crate::rational::Q;
use crate::terwilliger::{LayerOps, Op};
use num_traits::Zero;
use serde::Serialize;

/// A layer basis `w_0, …, w_d` of a thin module, `w_i ∈ E*_{r+i}W`.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    pub endpoint: usize,
    pub vectors: Vec<Vec<Q>>,
}

/// `L w_i = β_i w_{i-1}` and `R w_i = γ_i w_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderScalars {
    /// `β_1, …, β_d`.
    #[serde(with = "crate::rational::serde_fraction_vec")]
    pub beta: Vec<Q>,
    /// `γ_0, …, γ_{d-1}`.
    #[serde(with = "crate::rational::serde_fraction_vec")]
    pub gamma: Vec<Q>,
}

impl LadderScalars {
    /// `β_{i+1} γ_i`, the eigenvalues of `LR` on the basis; independent of scaling.
    pub fn lr_products(&self) -> Vec<Q> {
        self.beta.iter().zip(&self.gamma).map(|(b, g)| b * g).collect()
    }
}

/// Standard basis `{E*_{r+i} v}` for `v` spanning `E_tW`, when primitive
/// idempotents and the dual endpoint are available. Otherwise the basis
/// `w_0 ∈ E*_rW`, `w_i = R^i w_0` is returned.
pub fn standard_basis(
    ops: &LayerOps,
    w: &ModuleDescriptor,
    idempotents: Option<(&PrimitiveIdempotents, &[usize])>,
) -> Result<StandardBasis> {
    if !w.thin {
        let layer = w.layer_dims.iter().position(|&d| d > 1).unwrap_or(0) + w.endpoint;
        return Err(Error::NotThin { layer, dim: w.slice(layer).len() });
    }
    let r = w.endpoint;
    let seed = w.slice(r)[0].clone();
    if let (Some((pi, order)), Some(t), Algebra::T) = (idempotents, w.dual_endpoint, w.algebra) {
        let v = pi.apply(order[t], &ops.embed(r, &seed));
        let graded = ops.to_graded(&v);
        let vectors: Vec<Vec<Q>> = graded[r..=r + w.diameter].to_vec();
        if vectors.iter().all(|x| !is_zero_vec(x)) {
            return Ok(StandardBasis { endpoint: r, vectors });
        }
        return Err(Error::NotALadder(format!("E_t image vanishes on a layer of the module with endpoint {r}")));
    }
    let mut vectors = vec![seed];
    for i in 0..w.diameter {
        let next = ops.apply(Op::R, r + i, &vectors[i]).expect("layer inside range");
        vectors.push(next);
    }
    Ok(StandardBasis { endpoint: r, vectors })
}

/// The scalar `c` with `v = c u`, or `None` when `v` is not a multiple of `u`.
fn ratio(v: &[Q], u: &[Q]) -> Option<Q> {
    let nu = dot(u, u);
    if nu.is_zero() {
        return None;
    }
    let c = dot(v, u) / nu;
    v.iter().zip(u).all(|(a, b)| *a == &c * b).then_some(c)
}

/// Reads the ladder scalars off a layer basis, checking each relation exactly.
pub fn ladder_scalars(ops: &LayerOps, basis: &StandardBasis) -> Result<LadderScalars> {
    let r = basis.endpoint;
    let w = &basis.vectors;
    let d = w.len() - 1;
    let mut beta = Vec::with_capacity(d);
    let mut gamma = Vec::with_capacity(d);
    for i in 0..=d {
        let layer = r + i;
        if i > 0 {
            let lw = ops.apply(Op::L, layer, &w[i]).expect("layer above endpoint");
            let b = ratio(&lw, &w[i - 1])
                .ok_or_else(|| Error::NotALadder(format!("L w_{i} is not a multiple of w_{}", i - 1)))?;
            beta.push(b);
        } else if let Some(lw) = ops.apply(Op::L, layer, &w[0]) {
            if !is_zero_vec(&lw) {
                return Err(Error::NotALadder("L w_0 is nonzero".into()));
            }
        }
        match ops.apply(Op::R, layer, &w[i]) {
            Some(rw) if i < d => {
                let g = ratio(&rw, &w[i + 1])
                    .ok_or_else(|| Error::NotALadder(format!("R w_{i} is not a multiple of w_{}", i + 1)))?;
                gamma.push(g);
            }
            Some(rw) if !is_zero_vec(&rw) => return Err(Error::NotALadder("R w_d is nonzero".into())),
            _ => {}
        }
    }
    Ok(LadderScalars { beta, gamma })
}

/// Eigenvalues of `F` on each basis vector of a thin `T`-module.
pub fn flat_scalars(ops: &LayerOps, basis: &StandardBasis) -> Result<Vec<Q>> {
    basis
        .vectors
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let fw = ops.apply(Op::F, basis.endpoint + i, w).expect("layer inside range");
            ratio(&fw, w).ok_or_else(|| Error::NotALadder(format!("F w_{i} is not a multiple of w_{i}")))
        })
        .collect()
}

/// The isomorphism test for thin `T_f`-modules: same endpoint and diameter,
/// and `β_{i+1}/β'_{i+1} = γ'_i/γ_i` for every `i`.
pub fn tf_isomorphic(w: &ModuleDescriptor, lw: &LadderScalars, v: &ModuleDescriptor, lv: &LadderScalars) -> bool {
    w.endpoint == v.endpoint
        && w.diameter == v.diameter
        && lw.beta.len() == lv.beta.len()
        && (0..lw.beta.len()).all(|i| &lw.beta[i] * &lw.gamma[i] == &lv.beta[i] * &lv.gamma[i])
}

/// The two sides of the ratio criterion at index `i`: `(β_{i+1}/β'_{i+1}, γ'_i/γ_i)`.
pub fn ratio_pair(lw: &LadderScalars, lv: &LadderScalars, i: usize) -> Option<(Q, Q)> {
    let (b, bp, g, gp) = (lw.beta.get(i)?, lv.beta.get(i)?, lw.gamma.get(i)?, lv.gamma.get(i)?);
    if bp.is_zero() || g.is_zero() {
        return None;
    }
    Some((b / bp, gp / g))
}
