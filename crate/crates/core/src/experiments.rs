//! Monte-Carlo harness producing CSV evidence for the estimators.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;

use crate::complexity::{default_grid, estimate_dimension, sweep_dimension_curve, sweep_distance_curve, RadiusSweep};
use crate::error::{invalid, GraphonError, Result};
use crate::estimate::{check_distance_envelope, estimate_distances, sparse_rho_check};
use crate::model::{sample_graph, sample_latents, sparsify, AdjacencyMatrix, GraphonSpec, LatentSample};
use crate::oracle::{reference_dimension, true_distance_matrix, QuadratureConfig};
use crate::packing_test::{check_w_eta_beta, packing_test_from_estimate, Decision, TestConfig};

/// Named fixtures usable from plan files.
pub fn fixture(name: &str) -> Option<GraphonSpec> {
    let block = |k: usize, p: f64, q: f64| GraphonSpec::Sbm {
        weights: vec![1.0 / k as f64; k],
        block_probs: (0..k).map(|a| (0..k).map(|b| if a == b { p } else { q }).collect()).collect(),
    };
    Some(match name {
        "erdos_renyi" => GraphonSpec::ErdosRenyi { p: 0.5 },
        "sbm2" => block(2, 0.9, 0.1),
        "sbm3" => block(3, 0.9, 0.1),
        "sbm5" => block(5, 0.9, 0.1),
        "bipartite" => block(2, 0.0, 1.0),
        "geometric" => GraphonSpec::GeometricGraph { d: 1, delta: 0.1 },
        "geometric2" => GraphonSpec::GeometricGraph { d: 2, delta: 0.2 },
        _ => return None,
    })
}

pub const FIXTURES: [&str; 7] = ["erdos_renyi", "sbm2", "sbm3", "sbm5", "bipartite", "geometric", "geometric2"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    DistanceError,
    DimensionError,
    TestErrors,
    Figure1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Null,
    Alternative,
}

fn one() -> usize {
    1
}
fn two_f() -> f64 {
    2.0
}
fn one_f() -> f64 {
    1.0
}
fn eps_default() -> f64 {
    0.1
}

/// One `[[experiment]]` section of a plan file.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentPlan {
    pub name: String,
    pub kind: ExperimentKind,
    /// Named fixture; ignored when `graphon` is given.
    #[serde(default)]
    pub fixture: Option<String>,
    #[serde(default)]
    pub graphon: Option<GraphonSpec>,
    pub n_list: Vec<usize>,
    #[serde(default = "one")]
    pub trials: usize,
    /// Trial `t` uses seed `seed + t`.
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "two_f")]
    pub d_cap: f64,
    #[serde(default = "one_f")]
    pub c: f64,
    #[serde(default = "one_f")]
    pub rho: f64,
    #[serde(default = "one")]
    pub k: usize,
    #[serde(default = "eps_default")]
    pub eps: f64,
    #[serde(default)]
    pub hypothesis: Option<Hypothesis>,
    /// Radius grid for sweeps; the 101-point default otherwise.
    #[serde(default)]
    pub grid: Option<Vec<f64>>,
    /// CSV file name inside the output directory; `<name>.csv` by default.
    #[serde(default)]
    pub output: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanFile {
    pub experiment: Vec<ExperimentPlan>,
}

impl ExperimentPlan {
    pub fn new(name: &str, kind: ExperimentKind, fixture: &str, n_list: Vec<usize>, trials: usize) -> Self {
        ExperimentPlan {
            name: name.into(),
            kind,
            fixture: Some(fixture.into()),
            graphon: None,
            n_list,
            trials,
            seed: 0,
            d_cap: 2.0,
            c: 1.0,
            rho: 1.0,
            k: 1,
            eps: 0.1,
            hypothesis: None,
            grid: None,
            output: None,
        }
    }

    pub fn spec(&self) -> Result<GraphonSpec> {
        let spec = match (&self.graphon, &self.fixture) {
            (Some(g), _) => g.clone(),
            (None, Some(f)) => fixture(f).ok_or_else(|| GraphonError::InvalidArgument(format!("unknown fixture {f:?}")))?,
            (None, None) => return invalid("plan needs a fixture or a [graphon] table"),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn fixture_label(&self) -> String {
        match (&self.graphon, &self.fixture) {
            (None, Some(f)) => f.clone(),
            _ => "custom".into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return invalid("trials must be at least 1");
        }
        if self.n_list.is_empty() || self.n_list.windows(2).any(|w| w[1] <= w[0]) {
            return invalid("n_list must be nonempty and strictly increasing");
        }
        if self.n_list[0] < 3 {
            return invalid("every n must be at least 3");
        }
        if !(self.rho > 0.0 && self.rho <= 1.0) {
            return invalid(format!("rho = {} not in (0, 1]", self.rho));
        }
        TestConfig::new(self.k, self.eps).validate()?;
        self.spec().map(|_| ())
    }

    pub fn seeds(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.trials as u64).map(|t| self.seed + t)
    }

    fn jobs(&self) -> Vec<(usize, u64)> {
        self.n_list.iter().flat_map(|&n| self.seeds().map(move |s| (n, s))).collect()
    }
}

/// Latents and observed graph of one trial.
pub fn simulate(spec: &GraphonSpec, n: usize, rho: f64, seed: u64) -> Result<(LatentSample, AdjacencyMatrix)> {
    let lat = sample_latents(spec, n, seed)?;
    let a = sparsify(&sample_graph(spec, &lat, seed)?, rho, seed)?;
    Ok((lat, a))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceErrorRow {
    pub n: usize,
    pub seed: u64,
    pub max_error: f64,
    pub sup_bias: f64,
    pub min_slack: f64,
    pub satisfied: bool,
    pub rho_admissible: bool,
}

pub fn run_distance_error(plan: &ExperimentPlan) -> Result<Vec<DistanceErrorRow>> {
    plan.validate()?;
    let spec = plan.spec()?;
    plan.jobs()
        .into_par_iter()
        .map(|(n, seed)| {
            let (lat, a) = simulate(&spec, n, plan.rho, seed)?;
            let oracle = true_distance_matrix(&spec, &lat, &QuadratureConfig::default())?;
            let est = estimate_distances(&a)?;
            let env = check_distance_envelope(&oracle, &est)?;
            Ok(DistanceErrorRow {
                n,
                seed,
                max_error: env.max_error,
                sup_bias: env.sup_bias,
                min_slack: env.min_slack,
                satisfied: env.satisfied,
                rho_admissible: sparse_rho_check(n, plan.rho)?.admissible,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionErrorRow {
    pub n: usize,
    pub seed: u64,
    pub radius: f64,
    pub cov_estimate: usize,
    pub value: f64,
    pub reference: Option<f64>,
    pub abs_error: Option<f64>,
}

pub fn run_dimension_error(plan: &ExperimentPlan) -> Result<Vec<DimensionErrorRow>> {
    plan.validate()?;
    let spec = plan.spec()?;
    let reference = reference_dimension(&spec);
    plan.jobs()
        .into_par_iter()
        .map(|(n, seed)| {
            let (_, a) = simulate(&spec, n, plan.rho, seed)?;
            let dim = estimate_dimension(&estimate_distances(&a)?, plan.d_cap, plan.c)?;
            Ok(DimensionErrorRow {
                n,
                seed,
                radius: dim.radius_used,
                cov_estimate: dim.cov_estimate,
                value: dim.value,
                reference,
                abs_error: reference.map(|r| (dim.value - r).abs()),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestRow {
    pub n: usize,
    pub seed: u64,
    pub statistic: usize,
    pub decision: Decision,
    pub below_theorem_scale: bool,
    /// The certificate replays on the conservative distances.
    pub certificate_valid: bool,
}

pub fn run_test_errors(plan: &ExperimentPlan) -> Result<Vec<TestRow>> {
    plan.validate()?;
    let spec = plan.spec()?;
    let cfg = TestConfig::new(plan.k, plan.eps);
    plan.jobs()
        .into_par_iter()
        .map(|(n, seed)| {
            let (_, a) = simulate(&spec, n, plan.rho, seed)?;
            let est = estimate_distances(&a)?;
            let r = packing_test_from_estimate(&est, &cfg)?;
            let certificate_valid = match &r.certificate {
                None => true,
                Some(c) => {
                    let d = est.conservative_distances();
                    c.iter().enumerate().all(|(x, &p)| c[x + 1..].iter().all(|&q| d.get(p, q) > r.eps_hat))
                }
            };
            Ok(TestRow {
                n,
                seed,
                statistic: r.statistic,
                decision: r.decision,
                below_theorem_scale: r.below_theorem_scale,
                certificate_valid,
            })
        })
        .collect()
}

/// Theoretical ceiling of the error rate measured by a test plan at `n`.
pub fn test_error_ceiling(plan: &ExperimentPlan, n: usize) -> Result<Option<f64>> {
    let nf = n as f64;
    match plan.hypothesis.unwrap_or(Hypothesis::Null) {
        Hypothesis::Null => Ok(Some(2.0 / nf)),
        Hypothesis::Alternative => match check_w_eta_beta(&plan.spec()?, plan.k, plan.eps, n) {
            Ok(m) if m.satisfied => {
                let b = m.beta;
                Ok(Some(2.0 / nf + 2.0 * b * nf * (plan.k + 1) as f64 * (-b * (nf - 1.0)).exp()))
            }
            Ok(_) | Err(GraphonError::UnsupportedOracle(_)) => Ok(None),
            Err(e) => Err(e),
        },
    }
}

/// Estimated-distance and true-distance sweeps on one sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Figure1 {
    pub n: usize,
    pub seed: u64,
    pub estimated: RadiusSweep,
    pub oracle: RadiusSweep,
}

pub fn run_figure1(plan: &ExperimentPlan) -> Result<Figure1> {
    plan.validate()?;
    let spec = plan.spec()?;
    let (n, seed) = (plan.n_list[0], plan.seed);
    let grid = plan.grid.clone().unwrap_or_else(default_grid);
    let (lat, a) = simulate(&spec, n, plan.rho, seed)?;
    let oracle = true_distance_matrix(&spec, &lat, &QuadratureConfig::default())?;
    Ok(Figure1 {
        n,
        seed,
        estimated: sweep_dimension_curve(&estimate_distances(&a)?, &grid)?,
        oracle: sweep_distance_curve(&oracle.values, &grid)?,
    })
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let m = values.len();
    if m % 2 == 1 {
        values[m / 2]
    } else {
        (values[m / 2 - 1] + values[m / 2]) / 2.0
    }
}

/// Median of `f` over the rows of each `n`, in `n_list` order.
pub fn medians_by_n<R>(n_list: &[usize], rows: &[R], n_of: impl Fn(&R) -> usize, f: impl Fn(&R) -> f64) -> Vec<f64> {
    n_list
        .iter()
        .map(|&n| median(&mut rows.iter().filter(|r| n_of(r) == n).map(&f).collect::<Vec<_>>()))
        .collect()
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".into(), |x| x.to_string())
}

fn sweep_rows(out: &mut String, fixture: &str, n: usize, seed: u64, curve: &str, sweep: &RadiusSweep) {
    for r in &sweep.rows {
        let _ = writeln!(out, "{fixture},{n},{seed},{curve},{},{},{}", r.eps, r.cov_size, r.dim_value);
    }
}

/// Runs one experiment and renders its CSV and summary lines.
pub fn run_experiment(plan: &ExperimentPlan) -> Result<(String, Vec<String>)> {
    let fx = plan.fixture_label();
    let mut csv = String::new();
    let mut summary = Vec::new();
    match plan.kind {
        ExperimentKind::DistanceError => {
            let rows = run_distance_error(plan)?;
            csv.push_str("fixture,n,seed,rho,max_error,sup_bias,min_slack,satisfied,rho_admissible\n");
            for r in &rows {
                let _ = writeln!(
                    csv,
                    "{fx},{},{},{},{},{},{},{},{}",
                    r.n, r.seed, plan.rho, r.max_error, r.sup_bias, r.min_slack, r.satisfied, r.rho_admissible
                );
            }
            let med = medians_by_n(&plan.n_list, &rows, |r| r.n, |r| r.max_error);
            for (n, m) in plan.n_list.iter().zip(med) {
                let sat = rows.iter().filter(|r| r.n == *n && r.satisfied).count();
                summary.push(format!("n={n} envelope_rate={} median_max_error={m}", sat as f64 / plan.trials as f64));
            }
        }
        ExperimentKind::DimensionError => {
            let rows = run_dimension_error(plan)?;
            csv.push_str("fixture,n,seed,rho,radius,cov_estimate,dim_hat,reference,abs_error\n");
            for r in &rows {
                let _ = writeln!(
                    csv,
                    "{fx},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.seed,
                    plan.rho,
                    r.radius,
                    r.cov_estimate,
                    r.value,
                    fmt_opt(r.reference),
                    fmt_opt(r.abs_error)
                );
            }
            if rows.iter().all(|r| r.abs_error.is_some()) {
                let med = medians_by_n(&plan.n_list, &rows, |r| r.n, |r| r.abs_error.unwrap());
                let monotone = med.windows(2).all(|w| w[1] <= w[0]);
                for (n, m) in plan.n_list.iter().zip(&med) {
                    summary.push(format!("n={n} median_abs_error={m}"));
                }
                summary.push(format!("nonincreasing={monotone}"));
            }
        }
        ExperimentKind::TestErrors => {
            let rows = run_test_errors(plan)?;
            let hyp = plan.hypothesis.unwrap_or(Hypothesis::Null);
            csv.push_str("fixture,n,seed,k,eps,statistic,decision,below_theorem_scale\n");
            for r in &rows {
                let _ = writeln!(
                    csv,
                    "{fx},{},{},{},{},{},{},{}",
                    r.n,
                    r.seed,
                    plan.k,
                    plan.eps,
                    r.statistic,
                    r.decision.as_str(),
                    r.below_theorem_scale
                );
            }
            let wrong = match hyp {
                Hypothesis::Null => Decision::Reject,
                Hypothesis::Alternative => Decision::Accept,
            };
            for &n in &plan.n_list {
                let errs = rows.iter().filter(|r| r.n == n && r.decision == wrong).count();
                summary.push(format!(
                    "n={n} {}_error_rate={} ceiling={}",
                    if hyp == Hypothesis::Null { "type_i" } else { "type_ii" },
                    errs as f64 / plan.trials as f64,
                    fmt_opt(test_error_ceiling(plan, n)?)
                ));
            }
        }
        ExperimentKind::Figure1 => {
            let f = run_figure1(plan)?;
            csv.push_str("fixture,n,seed,curve,eps,cov_size,dim_value\n");
            sweep_rows(&mut csv, &fx, f.n, f.seed, "estimated", &f.estimated);
            sweep_rows(&mut csv, &fx, f.n, f.seed, "oracle", &f.oracle);
            for (name, s) in [("estimated", &f.estimated), ("oracle", &f.oracle)] {
                summary.push(match &s.plateau {
                    Some(p) => format!("{name} plateau eps=[{}, {}] mean={}", p.eps_lo, p.eps_hi, p.mean),
                    None => format!("{name} plateau none"),
                });
            }
        }
    }
    Ok((csv, summary))
}

pub fn parse_plan(text: &str) -> Result<PlanFile> {
    let plan: PlanFile = toml::from_str(text).map_err(|e| GraphonError::Parse(e.to_string()))?;
    for e in &plan.experiment {
        e.validate()?;
    }
    Ok(plan)
}

/// Runs every experiment of `plan`, writing one CSV each plus `manifest.txt`.
/// Returns the written paths.
pub fn run_plan(plan: &PlanFile, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let start = Instant::now();
    std::fs::create_dir_all(out_dir)?;
    let mut manifest = format!("graphon {}\n", env!("CARGO_PKG_VERSION"));
    let mut written = Vec::new();
    for e in &plan.experiment {
        let (csv, summary) = run_experiment(e)?;
        let file = e.output.clone().unwrap_or_else(|| format!("{}.csv", e.name));
        let path = out_dir.join(&file);
        std::fs::write(&path, csv)?;
        let _ = writeln!(
            manifest,
            "[{}] kind={:?} fixture={} n_list={:?} seeds={}..={} rho={} output={file}",
            e.name,
            e.kind,
            e.fixture_label(),
            e.n_list,
            e.seed,
            e.seed + e.trials as u64 - 1,
            e.rho
        );
        for line in summary {
            let _ = writeln!(manifest, "  {line}");
        }
        written.push(path);
    }
    let _ = writeln!(manifest, "wall_time_s={:.3}", start.elapsed().as_secs_f64());
    let path = out_dir.join("manifest.txt");
    std::fs::write(&path, manifest)?;
    written.push(path);
    Ok(written)
}
