//! Test of `N^(p)(eps) <= K` against `N^(p)(eps) > K` built on the
//! conservative distance estimator.

use crate::complexity::{exact_packing, greedy_packing, CoverMethod};
use crate::error::{invalid, GraphonError, Result};
use crate::estimate::{estimate_distances, t_n, DistanceEstimate};
use crate::model::{AdjacencyMatrix, GraphonSpec};
use crate::oracle::EXACT_THRESHOLD;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestConfig {
    pub k: usize,
    pub eps: f64,
    /// Largest `n` for which the packing statistic is computed exactly.
    pub exact_threshold: usize,
}

impl TestConfig {
    pub fn new(k: usize, eps: f64) -> Self {
        TestConfig {
            k,
            eps,
            exact_threshold: EXACT_THRESHOLD,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return invalid("K must be at least 1");
        }
        if !(self.eps > 0.0) {
            return invalid(format!("eps must be positive, got {}", self.eps));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Accept,
    Reject,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Accept => "accept",
            Decision::Reject => "reject",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub statistic: usize,
    /// `sqrt(eps^2 + t_n)`.
    pub eps_hat: f64,
    pub t_n: f64,
    pub decision: Decision,
    /// `K + 1` pairwise separated points, present iff rejecting.
    pub certificate: Option<Vec<usize>>,
    pub method: CoverMethod,
    /// `eps_hat >= 1` or `n < 6`: the test cannot reject meaningfully.
    pub below_theorem_scale: bool,
}

/// Runs the test on a fresh distance estimate of `a`.
pub fn run_packing_test(a: &AdjacencyMatrix, cfg: &TestConfig) -> Result<TestResult> {
    cfg.validate()?;
    packing_test_from_estimate(&estimate_distances(a)?, cfg)
}

/// Runs the test on precomputed estimates.
pub fn packing_test_from_estimate(est: &DistanceEstimate, cfg: &TestConfig) -> Result<TestResult> {
    cfg.validate()?;
    let n = est.n;
    let tn = t_n(n);
    let eps_hat = (cfg.eps * cfg.eps + tn).sqrt();
    let dist = est.conservative_distances();
    let packing = if n <= cfg.exact_threshold {
        exact_packing(&dist, eps_hat)
    } else {
        greedy_packing(&dist, eps_hat)
    };
    let reject = packing.size > cfg.k;
    Ok(TestResult {
        statistic: packing.size,
        eps_hat,
        t_n: tn,
        decision: if reject { Decision::Reject } else { Decision::Accept },
        certificate: reject.then(|| packing.centers[..cfg.k + 1].to_vec()),
        method: packing.method,
        below_theorem_scale: eps_hat >= 1.0 || n < 6,
    })
}

/// Best `(eta, beta)` witness of membership in the separated class.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMembership {
    /// Radius parameter; 0 stands for "arbitrarily small".
    pub eta: f64,
    /// Smallest ball measure of the best `K + 1` communities, 0 if none.
    pub beta: f64,
    pub satisfied: bool,
    /// Best community indices, if `K + 1` sufficiently separated ones exist.
    pub centers: Option<Vec<usize>>,
    /// `sqrt(eps^2 + 6 t_n)`.
    pub required_separation: f64,
}

fn next_combination(idx: &mut [usize], k: usize) -> bool {
    let m = idx.len();
    for p in (0..m).rev() {
        if idx[p] < k - m + p {
            idx[p] += 1;
            for q in p + 1..m {
                idx[q] = idx[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Searches community centers for `K + 1` balls of vanishing radius with
/// large measure and centers at least `sqrt(eps^2 + 6 t_n)` apart.
pub fn check_w_eta_beta(spec: &GraphonSpec, k: usize, eps: f64, n: usize) -> Result<ClassMembership> {
    if k == 0 || !(eps > 0.0) || n < 2 {
        return invalid(format!("need K >= 1, eps > 0, n >= 2; got {k}, {eps}, {n}"));
    }
    spec.validate()?;
    let bm = spec
        .block_model()
        .ok_or_else(|| GraphonError::UnsupportedOracle("class check needs a finite latent space".into()))?;
    let required = (eps * eps + 6.0 * t_n(n)).sqrt();
    let live: Vec<usize> = (0..bm.k()).filter(|&c| bm.weights[c] > 0.0).collect();
    // a radius-0 ball holds every community at distance 0
    let measure: Vec<f64> = live
        .iter()
        .map(|&c| live.iter().filter(|&&l| bm.distance(c, l) == 0.0).map(|&l| bm.weights[l]).sum())
        .collect();
    let mut best: Option<(f64, Vec<usize>)> = None;
    let m = k + 1;
    if live.len() >= m {
        let mut idx: Vec<usize> = (0..m).collect();
        loop {
            let separated = idx
                .iter()
                .enumerate()
                .all(|(a, &p)| idx[a + 1..].iter().all(|&q| bm.distance(live[p], live[q]) >= required));
            if separated {
                let beta = idx.iter().map(|&p| measure[p]).fold(f64::INFINITY, f64::min);
                if best.as_ref().is_none_or(|(b, _)| beta > *b) {
                    best = Some((beta, idx.iter().map(|&p| live[p]).collect()));
                }
            }
            if !next_combination(&mut idx, live.len()) {
                break;
            }
        }
    }
    let beta = best.as_ref().map_or(0.0, |b| b.0);
    Ok(ClassMembership {
        eta: 0.0,
        beta,
        satisfied: best.is_some() && beta > 1.0 / n as f64,
        centers: best.map(|b| b.1),
        required_separation: required,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_block(p: f64, q: f64) -> GraphonSpec {
        GraphonSpec::Sbm {
            weights: vec![0.5, 0.5],
            block_probs: vec![vec![p, q], vec![q, p]],
        }
    }

    #[test]
    fn config_validation() {
        assert!(TestConfig::new(0, 0.1).validate().is_err());
        assert!(TestConfig::new(1, 0.0).validate().is_err());
        assert!(TestConfig::new(1, 0.1).validate().is_ok());
    }

    #[test]
    fn small_graph_accepts_below_scale() {
        let r = run_packing_test(&AdjacencyMatrix::complete(10), &TestConfig::new(1, 0.1)).unwrap();
        assert_eq!(r.decision, Decision::Accept);
        assert_eq!(r.statistic, 1);
        assert!(r.below_theorem_scale);
        assert!(r.certificate.is_none());
        assert_eq!(r.method, CoverMethod::Exact);
    }

    #[test]
    fn class_needs_finite_space() {
        let spec = GraphonSpec::GeometricGraph { d: 1, delta: 0.1 };
        assert!(matches!(check_w_eta_beta(&spec, 1, 0.1, 1000), Err(GraphonError::UnsupportedOracle(_))));
    }

    #[test]
    fn erdos_renyi_not_in_class() {
        let m = check_w_eta_beta(&GraphonSpec::ErdosRenyi { p: 0.5 }, 1, 0.1, 1000).unwrap();
        assert!(!m.satisfied);
        assert!(m.centers.is_none());
    }

    #[test]
    fn separation_below_requirement() {
        // r_W = 0.6 but sqrt(eps^2 + 6 t_n) exceeds 2 at n = 1000
        let m = check_w_eta_beta(&two_block(0.8, 0.2), 1, 0.05, 1000).unwrap();
        assert!(m.required_separation > 2.4);
        assert!(!m.satisfied);
    }

    #[test]
    fn combinations_enumerated() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }
}
