//! Irreducible modules of the Terwilliger algebra and of its flat counterpart.

mod decompose;
mod doob;
mod ladder;
mod local;

pub use decompose::{decompose, Algebra, DecomposeOptions, Decomposition, ModuleDescriptor};
pub use doob::{doob_symbolic_check, DoobMismatch, DoobModuleShape, DoobReport};
pub use ladder::{flat_scalars, ladder_scalars, ratio_pair, standard_basis, tf_isomorphic, LadderScalars, StandardBasis};
pub use local::{
    endpoint1_census, extreme_nontrivial_eigenvalues, theta_tilde, tightness, Census, CensusClass, Extended,
    LocalPosition, Tightness,
};
