use super::config::Config;
use crate::error::{Error, Result};
use crate::families::{check_budget, FamilyExpectation, FamilySpec};
use crate::graph_core::{
    bfs_layers, classical_parameters, intersection_array, krein_parameters, near_polygon_check, parse_edge_list,
    q_polynomial_orderings, spectrum, write_edge_list, ClassicalParameters, Eigenvalue, Graph, IntersectionArray,
};
use crate::rational::Q;
use crate::terwilliger::{flatten, FlattenReport, LayerOps, Op};
use crate::tmodules::{
    decompose, extreme_nontrivial_eigenvalues, tightness, Algebra, DecomposeOptions,
    Decomposition, ModuleDescriptor, Tightness,
};
use crate::uniform::{certify_all_bases, certify_uniform, UniformCertificate, Verdict};
use serde::Serialize;
use std::path::Path;

/// A command result with the configuration that produced it.
#[derive(Serialize)]
pub struct Output<'a, T: Serialize> {
    #[serde(flatten)]
    pub body: &'a T,
    pub config: &'a Config,
}

pub fn to_json<T: Serialize>(body: &T, config: &Config) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Output { body, config })?;
    s.push('\n');
    Ok(s)
}

/// Reads an edge-list file, refusing graphs over the vertex budget.
pub fn load_graph(path: &Path, config: &Config) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    let g = parse_edge_list(&text)?;
    check_budget(g.n() as u128, config.vertex_budget)?;
    Ok(g)
}

fn check_base(g: &Graph, base: usize) -> Result<()> {
    if base >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: base, n: g.n() });
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySidecar {
    pub spec: FamilySpec,
    pub label: String,
    pub expected: FamilyExpectation,
    pub vertices: usize,
    pub edges: usize,
}

/// Builds a family member; returns its edge list and metadata.
pub fn cmd_family(spec: &FamilySpec, config: &Config) -> Result<(String, FamilySidecar)> {
    let g = spec.build(config.vertex_budget)?;
    let sidecar = FamilySidecar {
        spec: spec.clone(),
        label: spec.label(),
        expected: spec.expectation(),
        vertices: g.n(),
        edges: g.num_edges(),
    };
    Ok((write_edge_list(&g), sidecar))
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub base: usize,
    pub n: usize,
    pub diameter: usize,
    pub layer_sizes: Vec<usize>,
    pub intersection_array: IntersectionArray,
    pub classical_parameters: Vec<ClassicalParameters>,
    pub eigenvalues: Vec<Eigenvalue>,
    pub multiplicities: Vec<i64>,
    pub krein_nonnegative: bool,
    pub q_polynomial_orderings: Vec<Vec<usize>>,
    pub near_polygon: bool,
    pub bipartite: bool,
    /// Present when `θ_1` and `θ_D` are rational.
    pub tightness: Option<Tightness>,
}

pub fn cmd_analyze(g: &Graph, base: usize, config: &Config) -> Result<Analysis> {
    check_base(g, base)?;
    let ia = intersection_array(g)?;
    let spec = spectrum(&ia, config.numeric_tolerance);
    let krein = krein_parameters(&spec, config.numeric_tolerance);
    let orderings = krein.as_ref().map(q_polynomial_orderings).unwrap_or_default();
    let tight = extreme_nontrivial_eigenvalues(&ia).ok().map(|(t1, td)| tightness(&ia, &t1, &td));
    Ok(Analysis {
        base,
        n: g.n(),
        diameter: ia.diameter(),
        layer_sizes: bfs_layers(g, base)?.layer_sizes(),
        classical_parameters: classical_parameters(&ia),
        eigenvalues: spec.eigenvalues.clone(),
        multiplicities: spec.multiplicities.clone(),
        krein_nonnegative: krein.is_ok(),
        q_polynomial_orderings: orderings,
        near_polygon: near_polygon_check(g, &ia),
        bipartite: g.is_bipartite(),
        tightness: tight,
        intersection_array: ia,
    })
}

/// Edge list of `Γ_f` and its report.
pub fn cmd_flatten(g: &Graph, base: usize) -> Result<(String, FlattenReport)> {
    check_base(g, base)?;
    let f = flatten(g, base)?;
    Ok((write_edge_list(&f.graph), f.report()))
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum CertifyOutput {
    Single(Box<UniformCertificate>),
    AllBases { all_bases: bool, verdicts: Vec<Verdict>, certificates: Vec<UniformCertificate> },
}

pub fn cmd_certify(g: &Graph, base: Option<usize>, config: &Config) -> Result<CertifyOutput> {
    let opts = config.certify_options();
    match base {
        Some(x) => {
            check_base(g, x)?;
            Ok(CertifyOutput::Single(Box::new(certify_uniform(g, x, &opts)?)))
        }
        None => {
            let certificates = certify_all_bases(g, &opts)?;
            let verdicts = certificates.iter().map(|c| c.verdict).collect();
            Ok(CertifyOutput::AllBases { all_bases: true, verdicts, certificates })
        }
    }
}

/// One module in the decomposition output.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleSummary {
    pub endpoint: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_endpoint: Option<usize>,
    pub diameter: usize,
    pub dim: usize,
    pub layer_dims: Vec<usize>,
    pub thin: bool,
    #[serde(with = "crate::rational::serde_fraction_opt", skip_serializing_if = "Option::is_none")]
    pub local_eigenvalue: Option<Q>,
    pub certified_irreducible: bool,
    /// Index of the class of modules sharing every computed invariant.
    pub class: usize,
    pub multiplicity_of_class: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeOutput {
    pub base: usize,
    pub algebra: Algebra,
    pub n: usize,
    pub covered_dim: usize,
    pub numeric_fallback_used: bool,
    pub idempotent_ordering: Option<Vec<usize>>,
    pub modules: Vec<ModuleSummary>,
}

/// Invariants used to group modules: endpoint, dual endpoint, layer
/// dimensions, and the traces of `F` and `LR` on each slice. For thin modules
/// these traces are the scalars `a_i(W)` and `β_{i+1}γ_i`, which determine the
/// isomorphism class.
fn class_key(ops: &LayerOps, m: &ModuleDescriptor) -> (usize, Option<usize>, Vec<usize>, Vec<Q>, Vec<Q>) {
    let mut traces_f = Vec::new();
    let mut traces_lr = Vec::new();
    for i in m.endpoint..=m.endpoint + m.diameter {
        let slice = m.slice(i);
        let mut tf = Q::from_integer(0.into());
        let mut tlr = Q::from_integer(0.into());
        for b in slice {
            let nb = crate::linalg::dot(b, b);
            if m.algebra == Algebra::T {
                if let Some(fb) = ops.apply(Op::F, i, b) {
                    tf += crate::linalg::dot(&fb, b) / &nb;
                }
            }
            if let Some((_, lrb)) = ops.apply_word(&[Op::L, Op::R], i, b) {
                tlr += crate::linalg::dot(&lrb, b) / &nb;
            }
        }
        traces_f.push(tf);
        traces_lr.push(tlr);
    }
    (m.endpoint, m.dual_endpoint, m.layer_dims.clone(), traces_f, traces_lr)
}

pub fn summarize(g: &Graph, dec: &Decomposition) -> Result<DecomposeOutput> {
    let dp = bfs_layers(g, dec.base)?;
    let ops = LayerOps::new(g, &dp);
    let keys: Vec<_> = dec.modules.iter().map(|m| class_key(&ops, m)).collect();
    let mut distinct: Vec<&_> = Vec::new();
    let class: Vec<usize> = keys
        .iter()
        .map(|k| match distinct.iter().position(|d| *d == k) {
            Some(p) => p,
            None => {
                distinct.push(k);
                distinct.len() - 1
            }
        })
        .collect();
    let counts: Vec<usize> = (0..distinct.len()).map(|c| class.iter().filter(|&&x| x == c).count()).collect();
    let modules = dec
        .modules
        .iter()
        .zip(&class)
        .map(|(m, &c)| ModuleSummary {
            endpoint: m.endpoint,
            dual_endpoint: m.dual_endpoint,
            diameter: m.diameter,
            dim: m.dim,
            layer_dims: m.layer_dims.clone(),
            thin: m.thin,
            local_eigenvalue: m.local_eigenvalue.clone(),
            certified_irreducible: m.certified_irreducible,
            class: c,
            multiplicity_of_class: counts[c],
        })
        .collect();
    Ok(DecomposeOutput {
        base: dec.base,
        algebra: dec.algebra,
        n: dec.n,
        covered_dim: dec.covered_dim,
        numeric_fallback_used: dec.numeric_fallback_used,
        idempotent_ordering: dec.idempotent_ordering.clone(),
        modules,
    })
}

pub fn cmd_decompose(
    g: &Graph,
    base: usize,
    algebra: Algebra,
    max_endpoint: Option<usize>,
    config: &Config,
) -> Result<DecomposeOutput> {
    check_base(g, base)?;
    let opts = DecomposeOptions { algebra, max_endpoint, seed: config.decomposition_seed, ..Default::default() };
    let dec = decompose(g, base, &opts)?;
    summarize(g, &dec)
}
