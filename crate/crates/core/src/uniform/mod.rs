//! Uniform structures: the layer equations
//! `e_i⁻ RL² + LRL + e_i⁺ L²R = f_i L` on `E*_iV`, the admissibility
//! conditions on the parameter matrix, and the search for an admissible
//! solution.

mod certify;
pub mod closed_forms;
mod diagnostic;
mod layer;
mod params;
mod verify;

pub use certify::{
    certify_all_bases, certify_uniform, CertifyOptions, Checks, Failure, FailureKind, UniformCertificate, Verdict,
};
pub use diagnostic::{non_thin_diagnostic, EndpointOneReport, NonThinDiagnostic, NonThinWitness};
pub use layer::{layer_equations, solve_layer, LayerSolution, Row};
pub use params::{
    check_parameter_conditions, off_diagonal_condition, first_singular, principal_determinant, ConditionViolation,
    ParameterMatrix, UniformStructure,
};
pub use verify::{verify_given, verify_on_graph};
