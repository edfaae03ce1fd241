//! Matching covered and factor-critical graphs: matching predicates, ear
//! decompositions, nice-cycle certificates, spectral radius, and exhaustive
//! enumeration of the minimal classes with their spectral extremes.

pub mod blocks;
pub mod canon;
pub mod certificate;
pub mod ear;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod nice_cycle;
pub mod scalar;
pub mod spectral;

#[cfg(test)]
mod fixtures;

pub use canon::{canonical_form, SizeLimitError};
pub use certificate::{Certificate, Reason, Witness};
pub use ear::{EarDecomposition, EarKind};
pub use extremal::{EnumerationReport, GraphClass};
pub use graph::{Bipartition, Edge, Graph, GraphError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use matching::Matching;
pub use scalar::Scalar;
pub use spectral::{SpectralOptions, SpectralResult};

pub type SpectralResultF64 = SpectralResult<f64>;
pub type SpectralResultF32 = SpectralResult<f32>;
pub type SpectralOptionsF64 = SpectralOptions<f64>;
pub type ReportF64 = EnumerationReport<f64>;
