use rand::Rng;
use rayon::prelude::*;

use super::rgg::rgg_distance;
use crate::error::{GraphonError, Result};
use crate::matrix::SymMatrix;
use crate::model::{GraphonSpec, LatentSample};
use crate::rng::keyed_rng;

const QUAD_TAG: u64 = 0x5155_4144_0000_0005;

/// Numerical integration settings for kernels without a closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    /// Monte-Carlo draws per kernel integral (used for `d >= 3`).
    pub mc_samples: usize,
    /// Midpoint-rule points per axis (used for `d <= 2`).
    pub grid_points: usize,
    pub seed: u64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            mc_samples: 20_000,
            grid_points: 64,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMethod {
    Analytic,
    ClosedForm,
    Quadrature,
    MonteCarlo,
}

impl OracleMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            OracleMethod::Analytic => "analytic",
            OracleMethod::ClosedForm => "closed_form",
            OracleMethod::Quadrature => "quadrature",
            OracleMethod::MonteCarlo => "monte_carlo",
        }
    }
}

/// True neighborhood distances `r_W(omega_i, omega_j)` of a latent sample.
#[derive(Debug, Clone)]
pub struct TrueDistanceMatrix {
    /// `r_W^2`.
    pub sq: SymMatrix,
    /// `r_W`.
    pub values: SymMatrix,
    pub method: OracleMethod,
    /// Bound on `|r_W - values|` entrywise; 0 for analytic and closed forms.
    pub integration_error: f64,
    /// `sup_omega min_i r_W(omega, omega_i)` when the latent space is finite.
    pub sampling_error: Option<f64>,
}

impl TrueDistanceMatrix {
    fn from_sq(sq: SymMatrix, method: OracleMethod, integration_error: f64) -> Self {
        let values = sq.map(|v| v.max(0.0).sqrt());
        TrueDistanceMatrix {
            sq,
            values,
            method,
            integration_error,
            sampling_error: None,
        }
    }

    pub fn n(&self) -> usize {
        self.sq.n()
    }

    /// Oracle nearest neighbor `m(i)` (ties to the smallest index).
    pub fn nearest_neighbor(&self, i: usize) -> usize {
        let mut best = usize::MAX;
        let mut best_v = f64::INFINITY;
        for t in 0..self.n() {
            if t != i && self.values.get(i, t) < best_v {
                best_v = self.values.get(i, t);
                best = t;
            }
        }
        best
    }

    /// `r_W(omega_i, omega_{m(i)})`.
    pub fn nearest_neighbor_bias(&self, i: usize) -> f64 {
        self.values.get(i, self.nearest_neighbor(i))
    }
}

/// Ground-truth distance matrix of `latents` under `spec`.
pub fn true_distance_matrix(
    spec: &GraphonSpec,
    latents: &LatentSample,
    cfg: &QuadratureConfig,
) -> Result<TrueDistanceMatrix> {
    if latents.spec != *spec {
        return Err(GraphonError::InvalidArgument(
            "latent sample was drawn from a different graphon".into(),
        ));
    }
    let n = latents.len();
    match spec {
        GraphonSpec::Sbm { .. } | GraphonSpec::ErdosRenyi { .. } | GraphonSpec::LowerBoundSbm { .. } => {
            let bm = spec.block_model().expect("finite latent space");
            let k = bm.k();
            let mut table = vec![0.0; k * k];
            for a in 0..k {
                for b in 0..k {
                    table[a * k + b] = bm.sq_distance(a, b);
                }
            }
            let label = |i| latents.label(i).expect("labels");
            let sq = SymMatrix::from_upper(n, 0.0, |i, j| table[label(i) * k + label(j)]);
            let mut t = TrueDistanceMatrix::from_sq(sq, OracleMethod::Analytic, 0.0);
            t.sampling_error = sampling_error(spec, latents);
            Ok(t)
        }
        GraphonSpec::GeometricGraph { d, delta } => {
            let mut sq = SymMatrix::zeros(n);
            for i in 0..n {
                let xi = latents.coord(i).unwrap();
                for j in (i + 1)..n {
                    let xj = latents.coord(j).unwrap();
                    let e = xi.iter().zip(xj).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
                    sq.set(i, j, rgg_distance(*d, *delta, e)?);
                }
            }
            Ok(TrueDistanceMatrix::from_sq(sq, OracleMethod::ClosedForm, 0.0))
        }
        GraphonSpec::HolderCube { d, .. } => {
            let d = *d;
            if d <= 2 {
                let fine = quadrature_nodes(d, 2 * cfg.grid_points);
                let coarse = quadrature_nodes(d, cfg.grid_points);
                let sq_fine = slice_distances(spec, latents, &fine);
                let sq_coarse = slice_distances(spec, latents, &coarse);
                let mut worst: f64 = 0.0;
                for (a, b) in sq_fine.as_slice().iter().zip(sq_coarse.as_slice()) {
                    worst = worst.max((a - b).abs());
                }
                Ok(TrueDistanceMatrix::from_sq(sq_fine, OracleMethod::Quadrature, worst.sqrt()))
            } else {
                let mut rng = keyed_rng(cfg.seed, QUAD_TAG, d as u64);
                let nodes: Vec<f64> = (0..cfg.mc_samples * d).map(|_| rng.random::<f64>()).collect();
                let (sq, se) = slice_distances_with_se(spec, latents, &nodes);
                Ok(TrueDistanceMatrix::from_sq(sq, OracleMethod::MonteCarlo, (3.0 * se).sqrt()))
            }
        }
    }
}

/// Largest distance from a community of positive weight to the sample.
pub fn sampling_error(spec: &GraphonSpec, latents: &LatentSample) -> Option<f64> {
    let bm = spec.block_model()?;
    let labels: Vec<usize> = (0..latents.len()).map(|i| latents.label(i)).collect::<Option<_>>()?;
    let mut present = vec![false; bm.k()];
    labels.iter().for_each(|&l| present[l] = true);
    let mut worst: f64 = 0.0;
    for c in 0..bm.k() {
        if bm.weights[c] <= 0.0 {
            continue;
        }
        let nearest = (0..bm.k())
            .filter(|&l| present[l])
            .map(|l| bm.distance(c, l))
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(nearest);
    }
    Some(worst)
}

/// Minkowski dimension of `(Omega, r_W)` when it is known analytically.
pub fn reference_dimension(spec: &GraphonSpec) -> Option<f64> {
    match spec {
        GraphonSpec::Sbm { .. } | GraphonSpec::ErdosRenyi { .. } | GraphonSpec::LowerBoundSbm { .. } => Some(0.0),
        GraphonSpec::HolderCube { d, kernel, .. } => kernel.two_sided_exponent().map(|a| *d as f64 / a),
        // r_W ≍ |x - y|^{1/2} near the diagonal
        GraphonSpec::GeometricGraph { d, .. } => Some(2.0 * *d as f64),
    }
}

fn quadrature_nodes(d: usize, g: usize) -> Vec<f64> {
    let h = 1.0 / g as f64;
    match d {
        1 => (0..g).map(|a| (a as f64 + 0.5) * h).collect(),
        2 => (0..g)
            .flat_map(|a| (0..g).flat_map(move |b| [(a as f64 + 0.5) * h, (b as f64 + 0.5) * h]))
            .collect(),
        _ => unreachable!("tensor quadrature only for d <= 2"),
    }
}

fn slice_table(spec: &GraphonSpec, latents: &LatentSample, nodes: &[f64]) -> Vec<Vec<f64>> {
    let d = spec.latent_dim().unwrap();
    (0..latents.len())
        .into_par_iter()
        .map(|i| {
            let x = latents.coord(i).unwrap();
            nodes.chunks(d).map(|z| spec.kernel_coords(x, z)).collect()
        })
        .collect()
}

fn slice_distances(spec: &GraphonSpec, latents: &LatentSample, nodes: &[f64]) -> SymMatrix {
    slice_distances_with_se(spec, latents, nodes).0
}

/// Mean of `(W(x_i, z) - W(x_j, z))^2` over the nodes, and the worst
/// standard error of that mean over all pairs.
fn slice_distances_with_se(spec: &GraphonSpec, latents: &LatentSample, nodes: &[f64]) -> (SymMatrix, f64) {
    let table = slice_table(spec, latents, nodes);
    let n = latents.len();
    let m = table.first().map_or(1, |r| r.len()) as f64;
    let rows: Vec<Vec<(f64, f64)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            ((i + 1)..n)
                .map(|j| {
                    let (mut s, mut s2) = (0.0, 0.0);
                    for (a, b) in table[i].iter().zip(&table[j]) {
                        let v = (a - b) * (a - b);
                        s += v;
                        s2 += v * v;
                    }
                    let mean = s / m;
                    let var = (s2 / m - mean * mean).max(0.0);
                    (mean, (var / m).sqrt())
                })
                .collect()
        })
        .collect();
    let mut sq = SymMatrix::zeros(n);
    let mut worst: f64 = 0.0;
    for (i, row) in rows.iter().enumerate() {
        for (off, &(v, se)) in row.iter().enumerate() {
            sq.set(i, i + 1 + off, v);
            worst = worst.max(se);
        }
    }
    (sq, worst)
}
