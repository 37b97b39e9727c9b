use crate::error::{Error, Result};
use crate::graph_core::{bfs_layers, Graph};
use crate::linalg::{coordinates, rank};
use crate::rational::Q;
use crate::terwilliger::{word, LayerOps, Op};
use crate::tmodules::Decomposition;
use num_traits::Zero;
use serde::Serialize;

/// An endpoint-1 module that is not thin at layer 2.
#[derive(Clone, Debug, Serialize)]
pub struct NonThinWitness {
    pub module_index: usize,
    pub layer_dims: Vec<usize>,
    pub layer2_dim: usize,
}

/// What `R` and `LR²` do to `w ∈ E*_1W` for one endpoint-1 module.
#[derive(Clone, Debug, Serialize)]
pub struct EndpointOneReport {
    pub module_index: usize,
    pub layer_dims: Vec<usize>,
    /// `Rw` and `LR²w` are linearly independent.
    pub independent: bool,
    /// Coordinates of `LR²w` against `E*_2Aw` and `E*_2A_2w`, when these are
    /// independent and span it. Since `w ⊥ 1`, `E*_2A_3w` is minus their sum.
    #[serde(serialize_with = "ser_coords")]
    pub lr2_coordinates: Option<Vec<Q>>,
}

fn ser_coords<S: serde::Serializer>(c: &Option<Vec<Q>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.as_ref().map(|v| v.iter().map(crate::rational::to_fraction_string).collect::<Vec<_>>()).serialize(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct NonThinDiagnostic {
    pub base: usize,
    pub witness: Option<NonThinWitness>,
    pub endpoint_one: Vec<EndpointOneReport>,
}

/// Looks for an endpoint-1 module `W` with `dim E*_2W ≥ 2`; such a module
/// rules out a uniform structure. For every endpoint-1 module it also
/// records how `LR²w` relates to `Rw = E*_2Aw` and `E*_2A_3w`.
pub fn non_thin_diagnostic(g: &Graph, x: usize, modules: &Decomposition) -> Result<NonThinDiagnostic> {
    if modules.base != x || modules.n != g.n() {
        return Err(Error::DecompositionUnavailable(format!(
            "decomposition is for base {} on {} vertices",
            modules.base, modules.n
        )));
    }
    let dp = bfs_layers(g, x)?;
    let ops = LayerOps::new(g, &dp);
    if ops.epsilon() < 2 {
        return Ok(NonThinDiagnostic { base: x, witness: None, endpoint_one: Vec::new() });
    }
    // dist_from_layer1[a][b]: distance from the a-th vertex of Γ_1(x) to the b-th vertex of Γ_2(x).
    let layer1 = ops.vertices(1).to_vec();
    let layer2 = ops.vertices(2).to_vec();
    let dist: Vec<Vec<usize>> = layer1
        .iter()
        .map(|&z| {
            let p = bfs_layers(g, z).expect("vertex in range");
            layer2.iter().map(|&y| p.layer_of[y]).collect()
        })
        .collect();
    let distance_image = |w: &[Q], j: usize| -> Vec<Q> {
        (0..layer2.len())
            .map(|b| {
                let mut s = Q::zero();
                for (a, wa) in w.iter().enumerate() {
                    if dist[a][b] == j && !wa.is_zero() {
                        s += wa;
                    }
                }
                s
            })
            .collect()
    };

    let mut witness = None;
    let mut reports = Vec::new();
    for (idx, m) in modules.modules.iter().enumerate().filter(|(_, m)| m.endpoint == 1) {
        let layer2_dim = m.slice(2).len();
        if layer2_dim >= 2 && witness.is_none() {
            witness = Some(NonThinWitness { module_index: idx, layer_dims: m.layer_dims.clone(), layer2_dim });
        }
        let w = &m.slice(1)[0];
        let rw = ops.apply(Op::R, 1, w).expect("layer 2 exists");
        let lr2w = ops.apply_word(&word("LRR"), 1, w).map(|(_, v)| v).unwrap_or_else(|| vec![Q::zero(); rw.len()]);
        let independent = rank(&vec![rw.clone(), lr2w.clone()]) == 2;
        let span: Vec<Vec<Q>> = (1..=2).map(|j| distance_image(w, j)).collect();
        let lr2_coordinates = if rank(&span) == 2 { coordinates(&span, &lr2w) } else { None };
        reports.push(EndpointOneReport {
            module_index: idx,
            layer_dims: m.layer_dims.clone(),
            independent,
            lr2_coordinates,
        });
    }
    Ok(NonThinDiagnostic { base: x, witness, endpoint_one: reports })
}
