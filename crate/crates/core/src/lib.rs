//! Estimation of the complexity of the latent space of a graphon from one
//! observed graph: neighborhood distances, covering and packing numbers,
//! Minkowski dimension and a packing-number test.

pub mod cli;
pub mod complexity;
pub mod error;
pub mod estimate;
pub mod experiments;
pub mod io;
pub mod matrix;
pub mod model;
pub mod oracle;
pub mod packing_test;
mod rng;

pub use error::{GraphonError, Result};
pub use matrix::SymMatrix;
