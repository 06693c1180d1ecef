//! Ground-truth computations for analytic graphon families.

mod beta;
mod distances;
mod exact;
mod rgg;
mod sbm_approx;

pub use beta::{inc_beta_reg, ln_beta, unit_ball_volume};
pub use distances::{
    reference_dimension, sampling_error, true_distance_matrix, OracleMethod, QuadratureConfig,
    TrueDistanceMatrix,
};
pub use exact::{exact_covering_number, exact_packing_number, EXACT_THRESHOLD};
pub use rgg::{
    geometric_distance_in_cube, rgg_distance, rgg_distance_closed_d3, rgg_distance_monte_carlo,
};
pub use sbm_approx::{sbm_approximation, step_graphon_l2_error_quadrature, SbmApproximation, StepCells};
