use rayon::prelude::*;

use super::cover::{exact_cover, greedy_cover, CoverResult};
use crate::error::{invalid, GraphonError, Result};
use crate::estimate::DistanceEstimate;
use crate::matrix::SymMatrix;
use crate::oracle::EXACT_THRESHOLD;

pub const PLATEAU_TOL: f64 = 0.1;
pub const PLATEAU_MIN_LEN: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    Exact,
    Greedy,
    /// Exact up to the oracle threshold, greedy beyond.
    Auto,
}

impl std::str::FromStr for CoverMode {
    type Err = GraphonError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(CoverMode::Exact),
            "greedy" => Ok(CoverMode::Greedy),
            "auto" => Ok(CoverMode::Auto),
            other => invalid(format!("unknown cover mode {other:?}")),
        }
    }
}

fn cover_with(dist: &SymMatrix, eps: f64, mode: CoverMode) -> CoverResult {
    let exact = match mode {
        CoverMode::Exact => true,
        CoverMode::Greedy => false,
        CoverMode::Auto => dist.n() <= EXACT_THRESHOLD,
    };
    if exact {
        exact_cover(dist, eps)
    } else {
        greedy_cover(dist, eps)
    }
}

/// Covering number of the estimated distances `sqrt(max(0, r_hat^2))`.
///
/// `CoverMode::Exact` runs the branch and bound at any size.
pub fn covering_estimate(est: &DistanceEstimate, eps: f64, mode: CoverMode) -> Result<CoverResult> {
    if !(eps > 0.0) {
        return invalid(format!("covering radius must be positive, got {eps}"));
    }
    Ok(cover_with(&est.distances(), eps, mode))
}

fn check_radius_args(n: usize, d_cap: f64, c: f64) -> Result<()> {
    if n < 3 {
        return invalid(format!("dimension radius needs n >= 3, got {n}"));
    }
    if !(d_cap > 0.0) || !(c > 0.0) {
        return invalid(format!("need D_cap > 0 and c > 0, got {d_cap}, {c}"));
    }
    Ok(())
}

/// `c (ln n / n)^{1 / max(4, 2 D_cap)}`.
pub fn dimension_radius(n: usize, d_cap: f64, c: f64) -> Result<f64> {
    check_radius_args(n, d_cap, c)?;
    let r = (n as f64).ln() / n as f64;
    Ok(c * r.powf(1.0 / (2.0 * d_cap).max(4.0)))
}

/// `c max((ln n / n)^{1/(2 D_cap)}, rho^{-1/2} (ln n / n)^{1/4})`.
pub fn dimension_radius_sparse(n: usize, d_cap: f64, rho: f64, c: f64) -> Result<f64> {
    check_radius_args(n, d_cap, c)?;
    if !(rho > 0.0 && rho <= 1.0) {
        return invalid(format!("rho must lie in (0, 1], got {rho}"));
    }
    let r = (n as f64).ln() / n as f64;
    Ok(c * r.powf(1.0 / (2.0 * d_cap)).max(r.powf(0.25) / rho.sqrt()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionEstimate {
    pub value: f64,
    pub radius_used: f64,
    pub cov_estimate: usize,
    pub n: usize,
    pub d_cap: f64,
    pub sparse_rho: Option<f64>,
    pub cover: CoverResult,
}

/// `ln N_hat(eps) / (-ln eps)` at the theory-driven radius.
pub fn estimate_dimension(est: &DistanceEstimate, d_cap: f64, c: f64) -> Result<DimensionEstimate> {
    let sparse_rho = (est.rho < 1.0).then_some(est.rho);
    let eps = match sparse_rho {
        Some(rho) => dimension_radius_sparse(est.n, d_cap, rho, c)?,
        None => dimension_radius(est.n, d_cap, c)?,
    };
    if eps >= 1.0 {
        return Err(GraphonError::RadiusOutOfRange(eps));
    }
    let cover = covering_estimate(est, eps, CoverMode::Auto)?;
    Ok(DimensionEstimate {
        value: (cover.size as f64).ln() / -eps.ln(),
        radius_used: eps,
        cov_estimate: cover.size,
        n: est.n,
        d_cap,
        sparse_rho,
        cover,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub eps: f64,
    pub cov_size: usize,
    pub dim_value: f64,
}

/// Longest run of grid points whose consecutive dimension values differ by
/// less than [`PLATEAU_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plateau {
    /// Inclusive row indices.
    pub start: usize,
    pub end: usize,
    pub eps_lo: f64,
    pub eps_hi: f64,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusSweep {
    pub rows: Vec<SweepRow>,
    pub method: &'static str,
    pub plateau: Option<Plateau>,
}

/// `0.005 + 0.005 k` for `k = 0..=100`.
pub fn default_grid() -> Vec<f64> {
    (0..=100).map(|k| 0.005 + k as f64 * 0.005).collect()
}

/// Earliest longest plateau of at least [`PLATEAU_MIN_LEN`] points.
pub fn detect_plateau(rows: &[SweepRow]) -> Option<Plateau> {
    let mut best: Option<(usize, usize)> = None;
    let mut start = 0;
    for k in 0..rows.len() {
        let run_ends = k + 1 == rows.len() || (rows[k + 1].dim_value - rows[k].dim_value).abs() >= PLATEAU_TOL;
        if run_ends {
            if k + 1 - start >= PLATEAU_MIN_LEN && best.is_none_or(|(s, e)| k - start > e - s) {
                best = Some((start, k));
            }
            start = k + 1;
        }
    }
    best.map(|(s, e)| Plateau {
        start: s,
        end: e,
        eps_lo: rows[s].eps,
        eps_hi: rows[e].eps,
        mean: rows[s..=e].iter().map(|r| r.dim_value).sum::<f64>() / (e - s + 1) as f64,
    })
}

/// Greedy covering curve over `grid` on an arbitrary distance matrix.
pub fn sweep_distance_curve(dist: &SymMatrix, grid: &[f64]) -> Result<RadiusSweep> {
    if grid.is_empty() {
        return invalid("empty radius grid");
    }
    if grid.iter().any(|&e| !(e > 0.0 && e < 1.0)) {
        return invalid("grid radii must lie in (0, 1)");
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return invalid("grid must be strictly increasing");
    }
    let rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&eps| {
            let size = greedy_cover(dist, eps).size;
            SweepRow {
                eps,
                cov_size: size,
                dim_value: -(size as f64).ln() / eps.ln(),
            }
        })
        .collect();
    let plateau = detect_plateau(&rows);
    Ok(RadiusSweep {
        rows,
        method: "greedy",
        plateau,
    })
}

/// Figure-style sweep on the estimated distances.
pub fn sweep_dimension_curve(est: &DistanceEstimate, grid: &[f64]) -> Result<RadiusSweep> {
    sweep_distance_curve(&est.distances(), grid)
}

/// Fraction of unordered pairs closer than `eps`.
pub fn correlation_integral(dist: &SymMatrix, eps: f64) -> Result<f64> {
    let n = dist.n();
    if n < 2 || !(eps > 0.0) {
        return invalid(format!("correlation integral needs n >= 2 and eps > 0, got {n}, {eps}"));
    }
    let mut close = 0usize;
    for i in 0..n {
        close += dist.row(i)[i + 1..].iter().filter(|&&d| d < eps).count();
    }
    Ok(2.0 * close as f64 / (n * (n - 1)) as f64)
}
