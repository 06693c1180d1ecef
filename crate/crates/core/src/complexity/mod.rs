//! Plug-in covering, packing and dimension estimates.

pub(crate) mod bits;
mod cover;
mod dimension;

pub use cover::{
    exact_cover, exact_packing, greedy_cover, greedy_packing, CoverKind, CoverMethod, CoverResult,
};
pub use dimension::{
    correlation_integral, covering_estimate, default_grid, detect_plateau, dimension_radius,
    dimension_radius_sparse, estimate_dimension, sweep_dimension_curve, sweep_distance_curve,
    CoverMode, DimensionEstimate, Plateau, RadiusSweep, SweepRow, PLATEAU_MIN_LEN, PLATEAU_TOL,
};
