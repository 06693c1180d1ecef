use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Named kernels for graphons on `[0,1]^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelId {
    /// `W(x, y) = <x, y> / (2d) + 1/4`, values in `[1/4, 3/4]`.
    Affine,
    /// `W(x, y) = 1/2 + 1/2 * prod_k cos(pi (x_k - y_k))`, values in `[0, 1]`.
    ProductCosine,
}

impl KernelId {
    pub fn evaluate(self, x: &[f64], y: &[f64]) -> f64 {
        match self {
            KernelId::Affine => {
                let d = x.len() as f64;
                let dot: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
                dot / (2.0 * d) + 0.25
            }
            KernelId::ProductCosine => {
                let prod: f64 = x
                    .iter()
                    .zip(y)
                    .map(|(a, b)| (std::f64::consts::PI * (a - b)).cos())
                    .product();
                0.5 + 0.5 * prod
            }
        }
    }

    /// Hölder exponent for which the kernel satisfies the two-sided
    /// condition `r_W(x, y) ≍ |x - y|^alpha`, when it is known.
    ///
    /// The affine kernel has `r_W^2(x, y) = (x - y)^T S (x - y) / (4 d^2)`
    /// with `S = E[z z^T]` positive definite, hence exponent 1.
    pub fn two_sided_exponent(self) -> Option<f64> {
        match self {
            KernelId::Affine => Some(1.0),
            KernelId::ProductCosine => None,
        }
    }
}

/// A finite latent space: community weights and a symmetric block matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockModel {
    pub weights: Vec<f64>,
    pub probs: Vec<Vec<f64>>,
}

impl BlockModel {
    pub fn k(&self) -> usize {
        self.weights.len()
    }

    /// Neighborhood distance between two communities.
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        self.sq_distance(a, b).sqrt()
    }

    pub fn sq_distance(&self, a: usize, b: usize) -> f64 {
        if a == b {
            return 0.0;
        }
        self.weights
            .iter()
            .zip(self.probs[a].iter().zip(&self.probs[b]))
            .map(|(w, (pa, pb))| w * (pa - pb) * (pa - pb))
            .sum()
    }
}

/// Declarative description of a graphon `(Omega, mu, W)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphonSpec {
    /// Stochastic block model.
    Sbm {
        weights: Vec<f64>,
        block_probs: Vec<Vec<f64>>,
    },
    /// Kernel from the registry on `[0,1]^d` with the uniform measure.
    /// `alpha` is the declared Hölder exponent (metadata only).
    HolderCube {
        d: usize,
        kernel: KernelId,
        alpha: f64,
    },
    /// `W(x, y) = 1` iff `|x - y|_2 <= delta`, uniform on `[0,1]^d`.
    GeometricGraph { d: usize, delta: f64 },
    ErdosRenyi { p: f64 },
    /// Five-community block model used in the minimax lower bound.
    LowerBoundSbm { delta: f64, n_ref: usize },
}

impl GraphonSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            GraphonSpec::Sbm {
                weights,
                block_probs,
            } => {
                let k = weights.len();
                if k == 0 {
                    return invalid("SBM needs at least one community");
                }
                if weights.iter().any(|w| !(0.0..=1.0).contains(w)) {
                    return invalid("SBM weights must lie in [0, 1]");
                }
                let total: f64 = weights.iter().sum();
                if (total - 1.0).abs() > 1e-12 {
                    return invalid(format!("SBM weights sum to {total}, expected 1"));
                }
                if block_probs.len() != k || block_probs.iter().any(|r| r.len() != k) {
                    return invalid(format!("block_probs must be {k} x {k}"));
                }
                for a in 0..k {
                    for b in 0..k {
                        let p = block_probs[a][b];
                        if !(0.0..=1.0).contains(&p) {
                            return invalid(format!("block_probs[{a}][{b}] = {p} not in [0, 1]"));
                        }
                        if p != block_probs[b][a] {
                            return invalid("block_probs must be symmetric");
                        }
                    }
                }
                Ok(())
            }
            GraphonSpec::HolderCube { d, alpha, .. } => {
                if *d == 0 {
                    return invalid("HolderCube dimension must be positive");
                }
                if !(*alpha > 0.0) {
                    return invalid("HolderCube alpha must be positive");
                }
                Ok(())
            }
            GraphonSpec::GeometricGraph { d, delta } => {
                if *d == 0 {
                    return invalid("GeometricGraph dimension must be positive");
                }
                if !(*delta > 0.0 && *delta < 1.0) {
                    return invalid(format!("GeometricGraph delta = {delta} not in (0, 1)"));
                }
                Ok(())
            }
            GraphonSpec::ErdosRenyi { p } => {
                if !(0.0..=1.0).contains(p) {
                    return invalid(format!("ErdosRenyi p = {p} not in [0, 1]"));
                }
                Ok(())
            }
            GraphonSpec::LowerBoundSbm { delta, n_ref } => {
                check_lower_bound_domain(*n_ref, *delta)
            }
        }
    }

    /// Block structure for graphons on a finite latent space.
    pub fn block_model(&self) -> Option<BlockModel> {
        match self {
            GraphonSpec::Sbm {
                weights,
                block_probs,
            } => Some(BlockModel {
                weights: weights.clone(),
                probs: block_probs.clone(),
            }),
            GraphonSpec::ErdosRenyi { p } => Some(BlockModel {
                weights: vec![1.0],
                probs: vec![vec![*p]],
            }),
            GraphonSpec::LowerBoundSbm { delta, n_ref } => {
                Some(lower_bound_blocks(*n_ref, *delta))
            }
            _ => None,
        }
    }

    /// Dimension of the cube for continuous latent spaces.
    pub fn latent_dim(&self) -> Option<usize> {
        match self {
            GraphonSpec::HolderCube { d, .. } | GraphonSpec::GeometricGraph { d, .. } => Some(*d),
            _ => None,
        }
    }

    /// Kernel value between two points of `[0,1]^d`. Panics for finite
    /// latent spaces.
    pub fn kernel_coords(&self, x: &[f64], y: &[f64]) -> f64 {
        match self {
            GraphonSpec::HolderCube { kernel, .. } => kernel.evaluate(x, y),
            GraphonSpec::GeometricGraph { delta, .. } => {
                let sq: f64 = x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum();
                if sq.sqrt() <= *delta {
                    1.0
                } else {
                    0.0
                }
            }
            _ => panic!("kernel_coords called on a finite latent space"),
        }
    }
}

fn check_lower_bound_domain(n_ref: usize, delta: f64) -> Result<()> {
    if n_ref < 10 {
        return invalid(format!("n_ref = {n_ref} must be at least 10"));
    }
    let lo = (8.0 / (n_ref as f64 - 2.0)).sqrt();
    if !(delta > lo && delta < 1.0 / 40.0) {
        return invalid(format!(
            "delta = {delta} outside ({lo}, 1/40) for n_ref = {n_ref}"
        ));
    }
    Ok(())
}

fn lower_bound_blocks(n_ref: usize, delta: f64) -> BlockModel {
    let eta = 2.0 / (n_ref as f64 - 2.0);
    let s = (delta / 2.0).sqrt();
    let weights = vec![
        (1.0 - 2.0 * eta) / 2.0,
        (1.0 - 2.0 * eta) / 2.0,
        eta,
        eta / 2.0,
        eta / 2.0,
    ];
    let c1 = [0.5, 0.5, 0.5 + s, 0.5 + delta, 1.0];
    let c2 = [0.5, 0.5, 0.5 - s, 0.5 - delta, 0.0];
    let mut probs = vec![vec![0.5; 5]; 5];
    for j in 0..5 {
        probs[0][j] = c1[j];
        probs[j][0] = c1[j];
        probs[1][j] = c2[j];
        probs[j][1] = c2[j];
    }
    BlockModel { weights, probs }
}

/// The five-community block model of the distance lower bound.
pub fn lower_bound_sbm(n_ref: usize, delta: f64) -> Result<GraphonSpec> {
    check_lower_bound_domain(n_ref, delta)?;
    Ok(GraphonSpec::LowerBoundSbm { delta, n_ref })
}
