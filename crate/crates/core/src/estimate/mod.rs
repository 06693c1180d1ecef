//! Neighborhood-distance estimation from a single adjacency matrix.

mod budget;
mod distances;
mod gram;
mod neighbor;

pub use budget::{
    check_distance_envelope, error_budget, fluctuation_rate, sparse_rho_check, t_n, EnvelopeReport,
    ErrorBudget, SparseCheck,
};
pub use distances::{estimate_distances, DistanceEstimate};
pub use gram::{row_inner_products, InnerProductMatrix};
pub use neighbor::{nearest_neighbor_index, proxy_f_hat, NeighborIndex};
