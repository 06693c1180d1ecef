use rayon::prelude::*;

use super::gram::{row_inner_products, InnerProductMatrix};
use super::neighbor::{nearest_neighbor_index, NeighborIndex};
use crate::error::{GraphonError, Result};
use crate::matrix::SymMatrix;
use crate::model::AdjacencyMatrix;

/// Estimated squared neighborhood distances.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceEstimate {
    pub n: usize,
    /// `r_hat^2`, may be negative.
    pub sq_standard: SymMatrix,
    /// Conservative `r_hat_new^2`, nonnegative.
    pub sq_conservative: SymMatrix,
    pub rho: f64,
    pub neighbor: NeighborIndex,
}

impl DistanceEstimate {
    /// `r_hat = sqrt(max(0, r_hat^2))`.
    pub fn distances(&self) -> SymMatrix {
        self.sq_standard.map(|v| v.max(0.0).sqrt())
    }

    pub fn conservative_distances(&self) -> SymMatrix {
        self.sq_conservative.map(f64::sqrt)
    }

    /// Concentration results need `n >= 6`.
    pub fn below_theorem_scale(&self) -> bool {
        self.n < 6
    }
}

fn pair_values(ip: &InnerProductMatrix, m: &[usize], i: usize, j: usize) -> (f64, f64) {
    let n = ip.n() as f64;
    let c = |a, b| ip.count(a, b) as i64;
    let (mi, mj) = (m[i], m[j]);
    let quad = c(i, mi) + c(j, mj);
    let standard = (quad - 2 * c(i, j)) as f64 / n;
    let conservative = if i == mj || mi == j || mi == mj {
        0.0
    } else {
        let cross = [c(i, j), c(i, mj), c(mi, j), c(mi, mj)].into_iter().max().unwrap();
        (quad - 2 * cross).max(0) as f64 / n
    };
    (standard, conservative)
}

/// Standard and conservative distance estimates from one adjacency matrix.
pub fn estimate_distances(a: &AdjacencyMatrix) -> Result<DistanceEstimate> {
    let n = a.n();
    if n < 3 {
        return Err(GraphonError::DegenerateInstance(format!(
            "distance estimation needs n >= 3, got {n}"
        )));
    }
    let ip = row_inner_products(a);
    let neighbor = nearest_neighbor_index(&ip)?;
    let m = &neighbor.m_hat;
    let rows: Vec<Vec<(f64, f64)>> = (0..n)
        .into_par_iter()
        .map(|i| ((i + 1)..n).map(|j| pair_values(&ip, m, i, j)).collect())
        .collect();
    let mut sq_standard = SymMatrix::zeros(n);
    let mut sq_conservative = SymMatrix::zeros(n);
    for (i, row) in rows.iter().enumerate() {
        for (off, &(s, c)) in row.iter().enumerate() {
            sq_standard.set(i, i + 1 + off, s);
            sq_conservative.set(i, i + 1 + off, c);
        }
    }
    Ok(DistanceEstimate {
        n,
        sq_standard,
        sq_conservative,
        rho: a.rho(),
        neighbor,
    })
}
