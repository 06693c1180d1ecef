//! Graphon families, latent sampling and adjacency-matrix generation.

mod adjacency;
mod sample;
mod spec;

pub use adjacency::AdjacencyMatrix;
pub use sample::{sample_graph, sample_latents, sparsify, LatentSample, Latents};
pub use spec::{lower_bound_sbm, BlockModel, GraphonSpec, KernelId};
