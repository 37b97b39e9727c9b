//! Base-point machinery: dual idempotents, the `L/F/R` split of the
//! adjacency matrix, flattened graphs, Cartesian products and small-graph
//! isomorphism.

mod flatten;
mod iso;
mod layered;
mod split;

pub use flatten::{cartesian_product, flatten, FlattenReport, FlattenedGraph};
pub use iso::{graph_isomorphic, DEFAULT_ISO_LIMIT};
pub use layered::{word, LayerOps, Op};
pub use split::{lfr_split, DualIdempotents, LfrSplit, SparseBinary};
