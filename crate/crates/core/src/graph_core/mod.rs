//! Graphs, distance partitions, distance-regularity, classical parameters,
//! spectra and Krein parameters.

pub mod drg;
pub mod graph;
pub mod io;
pub mod spectral;

pub use drg::{
    classical_parameters, contains_induced_k112, gaussian_binomial, intersection_array, near_polygon_check,
    ClassicalParameters, IntersectionArray,
};
pub use graph::{bfs_layers, DistanceMatrix, DistancePartition, Graph};
pub use io::{parse_edge_list, write_edge_list};
pub use spectral::{
    krein_parameters, primitive_idempotents, q_polynomial_orderings, spectrum, Eigenvalue, KreinTensor,
    PrimitiveIdempotents, SpectralData,
};
