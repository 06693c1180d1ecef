use super::distances::DistanceEstimate;
use crate::error::{invalid, Result};
use crate::oracle::TrueDistanceMatrix;

/// `sqrt(ln n / n)`.
pub fn fluctuation_rate(n: usize) -> f64 {
    let n = n as f64;
    (n.ln() / n).sqrt()
}

/// Radius inflation of the packing test, `12 sqrt(ln n / n)`.
pub fn t_n(n: usize) -> f64 {
    12.0 * fluctuation_rate(n)
}

/// Error terms of the distance estimator.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorBudget {
    pub n: usize,
    pub t_n: f64,
    pub hoeffding_band: f64,
    /// `sqrt(6 sup_i r_W(omega_i, omega_m(i)) + 36 sqrt(ln n / n))`.
    pub b_sup: Option<f64>,
    pub s_omega: Option<f64>,
    /// `sup_{i,j} |r_W - r_hat|`.
    pub e_sup: Option<f64>,
}

pub fn error_budget(
    n: usize,
    oracle: Option<&TrueDistanceMatrix>,
    est: Option<&DistanceEstimate>,
) -> Result<ErrorBudget> {
    if n < 2 {
        return invalid(format!("error budget needs n >= 2, got {n}"));
    }
    for m in [oracle.map(|o| o.n()), est.map(|e| e.n)].into_iter().flatten() {
        if m != n {
            return invalid(format!("size mismatch: budget for n = {n}, input has {m}"));
        }
    }
    let rate = fluctuation_rate(n);
    let mut budget = ErrorBudget {
        n,
        t_n: 12.0 * rate,
        hoeffding_band: 3.0 * rate,
        b_sup: None,
        s_omega: None,
        e_sup: None,
    };
    if let Some(o) = oracle {
        let sup_bias = (0..n).map(|i| o.nearest_neighbor_bias(i)).fold(0.0, f64::max);
        budget.b_sup = Some((6.0 * sup_bias + 36.0 * rate).sqrt());
        budget.s_omega = o.sampling_error;
        if let Some(e) = est {
            let r_hat = e.distances();
            let mut worst: f64 = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    worst = worst.max((o.values.get(i, j) - r_hat.get(i, j)).abs());
                }
            }
            budget.e_sup = Some(worst);
        }
    }
    Ok(budget)
}

/// Outcome of the admissibility check on the sparsity level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SparseCheck {
    pub admissible: bool,
    /// `2 sqrt(ln n / (n - 2))`.
    pub threshold: f64,
}

pub fn sparse_rho_check(n: usize, rho: f64) -> Result<SparseCheck> {
    if n < 3 {
        return invalid(format!("sparse check needs n >= 3, got {n}"));
    }
    let nf = n as f64;
    let threshold = 2.0 * (nf.ln() / (nf - 2.0)).sqrt();
    Ok(SparseCheck {
        admissible: rho >= threshold,
        threshold,
    })
}

/// Pairwise comparison of `r_hat^2` with the oracle against the
/// concentration envelope (dense bound when `rho = 1`, scaled otherwise).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeReport {
    pub max_error: f64,
    /// Smallest `bound - error` over pairs; negative iff violated.
    pub min_slack: f64,
    pub sup_bias: f64,
    pub satisfied: bool,
}

pub fn check_distance_envelope(oracle: &TrueDistanceMatrix, est: &DistanceEstimate) -> Result<EnvelopeReport> {
    let n = est.n;
    if oracle.n() != n {
        return invalid(format!("oracle has n = {}, estimate has n = {n}", oracle.n()));
    }
    let rate = fluctuation_rate(n);
    let rho = est.rho;
    let bias: Vec<f64> = (0..n).map(|i| oracle.nearest_neighbor_bias(i)).collect();
    let mut max_error: f64 = 0.0;
    let mut min_slack = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            let err = (rho * rho * oracle.sq.get(i, j) - est.sq_standard.get(i, j)).abs();
            let bound = if rho == 1.0 {
                3.0 * bias[i] + 3.0 * bias[j] + 36.0 * rate
            } else {
                3.0 * rho * (rho * bias[i] + rho * bias[j] + 20.0 * rate)
            };
            max_error = max_error.max(err);
            min_slack = min_slack.min(bound - err);
        }
    }
    Ok(EnvelopeReport {
        max_error,
        min_slack,
        sup_bias: bias.iter().cloned().fold(0.0, f64::max),
        satisfied: min_slack >= 0.0,
    })
}
