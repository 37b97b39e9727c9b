use super::decompose::{dual_endpoint, idempotents_for, Algebra, Decomposition};
use super::ladder::{flat_scalars, ladder_scalars, standard_basis, LadderScalars};
use crate::error::{Error, Result};
use crate::graph_core::{bfs_layers, intersection_array, spectrum, Graph, IntersectionArray};
use crate::rational::{q, to_fraction_string, Q};
use crate::terwilliger::LayerOps;
use num_traits::One;
use serde::{Serialize, Serializer};

/// A rational number or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extended {
    Finite(Q),
    Infinity,
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(x) => s.serialize_str(&to_fraction_string(x)),
            Extended::Infinity => s.serialize_str("inf"),
        }
    }
}

/// `z̃ = -1 - b_1/(1 + z)`, with `-1 ↦ ∞` and `∞ ↦ -1`.
pub fn theta_tilde(z: &Extended, b1: &Q) -> Extended {
    match z {
        Extended::Infinity => Extended::Finite(q(-1)),
        Extended::Finite(z) if *z == q(-1) => Extended::Infinity,
        Extended::Finite(z) => Extended::Finite(q(-1) - b1 / (Q::one() + z)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tightness {
    pub tight: bool,
    /// `(θ_1 + k/(a_1+1))(θ_D + k/(a_1+1)) + k a_1 b_1/(a_1+1)^2`; zero exactly when tight.
    #[serde(with = "crate::rational::serde_fraction")]
    pub gap: Q,
}

pub fn tightness(ia: &IntersectionArray, theta1: &Q, theta_d: &Q) -> Tightness {
    let (k, a1, b1) = (q(ia.b(0)), q(ia.a(1)), q(ia.b(1)));
    let s = &k / (&a1 + q(1));
    let gap = (theta1 + &s) * (theta_d + &s) + &k * &a1 * &b1 / ((&a1 + q(1)) * (&a1 + q(1)));
    Tightness { tight: num_traits::Zero::is_zero(&gap), gap }
}

/// `θ_1` and `θ_D` of a graph with rational spectrum.
pub fn extreme_nontrivial_eigenvalues(ia: &IntersectionArray) -> Result<(Q, Q)> {
    let spec = spectrum(ia, 1e-9);
    let ev = spec.exact_eigenvalues().ok_or(Error::IrrationalSpectrum { index: 1 })?;
    if ev.len() < 2 {
        return Err(Error::InvalidParams("diameter must be at least 1".into()));
    }
    Ok((ev[1].clone(), ev[ev.len() - 1].clone()))
}

/// Where a local eigenvalue sits relative to `θ̃_1` and `θ̃_D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalPosition {
    ThetaOneTilde,
    ThetaDTilde,
    Between,
    Outside,
    Unknown,
}

/// One isomorphism class of endpoint-1 modules.
#[derive(Clone, Debug, Serialize)]
pub struct CensusClass {
    #[serde(with = "crate::rational::serde_fraction_opt")]
    pub local_eigenvalue: Option<Q>,
    pub diameter: usize,
    pub dual_endpoint: Option<usize>,
    pub thin: bool,
    pub multiplicity: usize,
    pub layer_dims: Vec<usize>,
    pub position: LocalPosition,
    /// Ladder scalars of a representative in its standard basis.
    pub ladder: Option<LadderScalars>,
    /// Eigenvalues of `F` on the standard basis.
    #[serde(with = "crate::rational::serde_fraction_vec")]
    pub flat_scalars: Vec<Q>,
    /// Whether `(η, d, t)` agrees with the predicted pattern.
    pub prediction_holds: Option<bool>,
    /// Indices into the decomposition's module list.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub base: usize,
    pub diameter: usize,
    pub theta_one_tilde: Extended,
    pub theta_d_tilde: Extended,
    pub classes: Vec<CensusClass>,
    pub predictions_hold: bool,
}

/// (diameter, dual endpoint, layer dims, flat scalars, LR products)
type ClassKey = (usize, Option<usize>, Vec<usize>, Vec<Q>, Vec<Q>);

/// Groups the endpoint-1 `T`-modules of a decomposition into isomorphism
/// classes and checks the `(η, d, t)` pattern: `η ∈ {θ̃_1, θ̃_D}` forces
/// `d = D - 2` and `t ∈ {1, 2}`, while `θ̃_1 < η < θ̃_D` forces `d = D - 1`, `t = 1`.
pub fn endpoint1_census(g: &Graph, x: usize, dec: &Decomposition) -> Result<Census> {
    if dec.algebra != Algebra::T {
        return Err(Error::InvalidParams("the census needs a decomposition into T-modules".into()));
    }
    let ia = intersection_array(g)?;
    let d_graph = ia.diameter();
    let (t1, td) = extreme_nontrivial_eigenvalues(&ia)?;
    let b1 = q(ia.b(1));
    let tt1 = theta_tilde(&Extended::Finite(t1), &b1);
    let ttd = theta_tilde(&Extended::Finite(td), &b1);
    let dp = bfs_layers(g, x)?;
    let ops = LayerOps::new(g, &dp);
    let idem = idempotents_for(g);

    let mut classes: Vec<CensusClass> = Vec::new();
    let mut keys: Vec<ClassKey> = Vec::new();
    for (idx, m) in dec.modules.iter().enumerate().filter(|(_, m)| m.endpoint == 1) {
        let t = m.dual_endpoint.or_else(|| {
            idem.as_ref().and_then(|(pi, order)| dual_endpoint(pi, order, &m.global_basis(&ops)))
        });
        let mut with_t = m.clone();
        with_t.dual_endpoint = t;
        let (ladder, flats) = if m.thin {
            let basis = standard_basis(&ops, &with_t, idem.as_ref().map(|(p, o)| (p, o.as_slice())))?;
            (Some(ladder_scalars(&ops, &basis)?), flat_scalars(&ops, &basis)?)
        } else {
            (None, Vec::new())
        };
        let lr = ladder.as_ref().map(LadderScalars::lr_products).unwrap_or_default();
        let key = (m.diameter, t, m.layer_dims.clone(), flats.clone(), lr);
        if let Some(pos) = keys.iter().position(|k| *k == key) {
            classes[pos].multiplicity += 1;
            classes[pos].members.push(idx);
            continue;
        }
        let eta = m.local_eigenvalue.clone();
        let position = match &eta {
            None => LocalPosition::Unknown,
            Some(e) => classify(e, &tt1, &ttd),
        };
        let prediction_holds = match position {
            LocalPosition::ThetaOneTilde | LocalPosition::ThetaDTilde => {
                Some(m.diameter + 2 == d_graph && matches!(t, Some(1) | Some(2)))
            }
            LocalPosition::Between => Some(m.diameter + 1 == d_graph && t == Some(1)),
            LocalPosition::Outside => Some(false),
            LocalPosition::Unknown => None,
        };
        keys.push(key);
        classes.push(CensusClass {
            local_eigenvalue: eta,
            diameter: m.diameter,
            dual_endpoint: t,
            thin: m.thin,
            multiplicity: 1,
            layer_dims: m.layer_dims.clone(),
            position,
            ladder,
            flat_scalars: flats,
            prediction_holds,
            members: vec![idx],
        });
    }
    let predictions_hold = classes.iter().all(|c| c.prediction_holds != Some(false));
    Ok(Census { base: x, diameter: d_graph, theta_one_tilde: tt1, theta_d_tilde: ttd, classes, predictions_hold })
}

fn classify(eta: &Q, tt1: &Extended, ttd: &Extended) -> LocalPosition {
    let (Extended::Finite(a), Extended::Finite(b)) = (tt1, ttd) else {
        return LocalPosition::Unknown;
    };
    if eta == a {
        LocalPosition::ThetaOneTilde
    } else if eta == b {
        LocalPosition::ThetaDTilde
    } else if a < eta && eta < b {
        LocalPosition::Between
    } else {
        LocalPosition::Outside
    }
}
