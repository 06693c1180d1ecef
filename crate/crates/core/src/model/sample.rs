use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use rayon::prelude::*;

use super::{AdjacencyMatrix, GraphonSpec};
use crate::error::{invalid, GraphonError, Result};
use crate::rng::keyed_rng;

const LATENT_TAG: u64 = 0x4c41_5445_4e54_0001;
const EDGE_TAG: u64 = 0x4544_4745_0000_0002;
const THIN_TAG: u64 = 0x5448_494e_0000_0003;

/// Latent positions of the `n` sampled nodes.
#[derive(Debug, Clone, PartialEq)]
pub enum Latents {
    /// Community index per node (finite latent spaces).
    Labels(Vec<usize>),
    /// Points of `[0,1]^dim`, row-major.
    Coords { dim: usize, data: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct LatentSample {
    pub spec: GraphonSpec,
    pub points: Latents,
    pub seed: u64,
}

impl LatentSample {
    pub fn len(&self) -> usize {
        match &self.points {
            Latents::Labels(l) => l.len(),
            Latents::Coords { dim, data } => data.len() / dim,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self, i: usize) -> Option<usize> {
        match &self.points {
            Latents::Labels(l) => Some(l[i]),
            Latents::Coords { .. } => None,
        }
    }

    pub fn coord(&self, i: usize) -> Option<&[f64]> {
        match &self.points {
            Latents::Labels(_) => None,
            Latents::Coords { dim, data } => Some(&data[i * dim..(i + 1) * dim]),
        }
    }

    /// `W(omega_i, omega_j)`.
    pub fn kernel(&self, i: usize, j: usize) -> f64 {
        match &self.points {
            Latents::Labels(l) => match &self.spec {
                GraphonSpec::ErdosRenyi { p } => *p,
                GraphonSpec::Sbm { block_probs, .. } => block_probs[l[i]][l[j]],
                other => other.block_model().expect("finite latent space").probs[l[i]][l[j]],
            },
            Latents::Coords { .. } => self
                .spec
                .kernel_coords(self.coord(i).unwrap(), self.coord(j).unwrap()),
        }
    }
}

/// Draws `n` i.i.d. latent positions from the measure of `spec`.
pub fn sample_latents(spec: &GraphonSpec, n: usize, seed: u64) -> Result<LatentSample> {
    if n < 2 {
        return invalid(format!("need n >= 2 latent points, got {n}"));
    }
    spec.validate()?;
    let mut rng = keyed_rng(seed, LATENT_TAG, 0);
    let points = match spec.latent_dim() {
        Some(dim) => Latents::Coords {
            dim,
            data: (0..n * dim).map(|_| rng.random::<f64>()).collect(),
        },
        None => {
            let bm = spec.block_model().expect("finite latent space");
            if bm.k() == 1 {
                Latents::Labels(vec![0; n])
            } else {
                let dist = WeightedIndex::new(&bm.weights)
                    .map_err(|e| GraphonError::InvalidArgument(format!("community weights: {e}")))?;
                Latents::Labels((0..n).map(|_| dist.sample(&mut rng)).collect())
            }
        }
    };
    Ok(LatentSample {
        spec: spec.clone(),
        points,
        seed,
    })
}

/// Draws `A_ij ~ Bernoulli(W(omega_i, omega_j))` independently for `i < j`.
///
/// Row `i` reads its own ChaCha stream, and the draw for `(i, j)` sits at
/// position `j - i - 1` in it, so the output does not depend on how rows
/// are split across threads.
pub fn sample_graph(spec: &GraphonSpec, latents: &LatentSample, seed: u64) -> Result<AdjacencyMatrix> {
    if latents.spec != *spec {
        return invalid("latent sample was drawn from a different graphon");
    }
    let n = latents.len();
    let upper: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = keyed_rng(seed, EDGE_TAG, i as u64);
            ((i + 1)..n)
                .filter(|&j| rng.random::<f64>() < latents.kernel(i, j))
                .collect()
        })
        .collect();
    let mut a = AdjacencyMatrix::empty(n);
    for (i, row) in upper.iter().enumerate() {
        for &j in row {
            a.insert(i, j);
        }
    }
    Ok(a)
}

/// Keeps each edge independently with probability `rho`.
pub fn sparsify(a: &AdjacencyMatrix, rho: f64, seed: u64) -> Result<AdjacencyMatrix> {
    if !(rho > 0.0 && rho <= 1.0) {
        return invalid(format!("rho = {rho} not in (0, 1]"));
    }
    if a.rho() != 1.0 {
        return Err(GraphonError::DoubleSparsification(a.rho()));
    }
    if rho == 1.0 {
        return Ok(a.clone());
    }
    let n = a.n();
    let upper: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = keyed_rng(seed, THIN_TAG, i as u64);
            ((i + 1)..n)
                .filter(|&j| {
                    let keep = rng.random::<f64>() < rho;
                    keep && a.get(i, j)
                })
                .collect()
        })
        .collect();
    let mut out = AdjacencyMatrix::empty(n).with_rho(rho);
    for (i, row) in upper.iter().enumerate() {
        for &j in row {
            out.insert(i, j);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric_latents(xs: &[f64], delta: f64) -> (GraphonSpec, LatentSample) {
        let spec = GraphonSpec::GeometricGraph { d: 1, delta };
        let lat = LatentSample {
            spec: spec.clone(),
            points: Latents::Coords {
                dim: 1,
                data: xs.to_vec(),
            },
            seed: 0,
        };
        (spec, lat)
    }

    #[test]
    fn rejects_tiny_n() {
        assert!(sample_latents(&GraphonSpec::ErdosRenyi { p: 0.5 }, 1, 0).is_err());
    }

    #[test]
    fn erdos_renyi_latents_are_one_point() {
        let lat = sample_latents(&GraphonSpec::ErdosRenyi { p: 0.5 }, 4, 7).unwrap();
        assert_eq!(lat.points, Latents::Labels(vec![0; 4]));
    }

    #[test]
    fn sbm_community_fraction() {
        let spec = GraphonSpec::Sbm {
            weights: vec![0.5, 0.5],
            block_probs: vec![vec![0.5, 0.5], vec![0.5, 0.5]],
        };
        let lat = sample_latents(&spec, 1000, 1).unwrap();
        let ones = (0..1000).filter(|&i| lat.label(i) == Some(0)).count() as f64;
        let sigma = (0.25f64 / 1000.0).sqrt();
        assert!((ones / 1000.0 - 0.5).abs() <= 5.0 * sigma);
    }

    #[test]
    fn geometric_latents_in_cube() {
        let spec = GraphonSpec::GeometricGraph { d: 1, delta: 0.1 };
        let lat = sample_latents(&spec, 3, 3).unwrap();
        assert_eq!(lat.len(), 3);
        assert!((0..3).all(|i| (0.0..=1.0).contains(&lat.coord(i).unwrap()[0])));
    }

    #[test]
    fn geometric_edges_are_deterministic() {
        let (spec, lat) = geometric_latents(&[0.10, 0.15, 0.90], 0.1);
        for seed in 0..5 {
            let a = sample_graph(&spec, &lat, seed).unwrap();
            assert_eq!(a.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        }
    }

    #[test]
    fn complete_when_p_is_one() {
        let spec = GraphonSpec::ErdosRenyi { p: 1.0 };
        let lat = sample_latents(&spec, 30, 1).unwrap();
        assert_eq!(sample_graph(&spec, &lat, 2).unwrap(), AdjacencyMatrix::complete(30));
    }

    #[test]
    fn erdos_renyi_density() {
        let spec = GraphonSpec::ErdosRenyi { p: 0.3 };
        let lat = sample_latents(&spec, 500, 4).unwrap();
        let a = sample_graph(&spec, &lat, 5).unwrap();
        assert!(a.is_valid());
        let pairs = 500.0 * 499.0 / 2.0;
        let density = a.num_edges() as f64 / pairs;
        assert!((density - 0.3).abs() <= 5.0 * (0.21f64 / pairs).sqrt());
    }

    #[test]
    fn mismatched_spec_rejected() {
        let lat = sample_latents(&GraphonSpec::ErdosRenyi { p: 0.3 }, 5, 1).unwrap();
        assert!(sample_graph(&GraphonSpec::ErdosRenyi { p: 0.4 }, &lat, 1).is_err());
    }

    #[test]
    fn sparsify_rules() {
        let a = AdjacencyMatrix::complete(4);
        assert_eq!(sparsify(&a, 1.0, 3).unwrap(), a);
        assert!(sparsify(&a, 0.0, 3).is_err());
        let half = sparsify(&a, 0.5, 3).unwrap();
        assert!(matches!(
            sparsify(&half, 0.5, 3),
            Err(GraphonError::DoubleSparsification(_))
        ));
    }

    #[test]
    fn sparsify_retention_fraction() {
        let a = AdjacencyMatrix::complete(1000);
        let s = sparsify(&a, 0.5, 11).unwrap();
        assert!(s.is_valid());
        assert_eq!(s.rho(), 0.5);
        let pairs = 1000.0 * 999.0 / 2.0;
        let frac = s.num_edges() as f64 / pairs;
        assert!((frac - 0.5).abs() <= 5.0 * (0.25f64 / pairs).sqrt());
    }

    #[test]
    fn same_seed_same_graph() {
        let spec = GraphonSpec::Sbm {
            weights: vec![0.3, 0.7],
            block_probs: vec![vec![0.9, 0.2], vec![0.2, 0.6]],
        };
        let l1 = sample_latents(&spec, 120, 9).unwrap();
        let l2 = sample_latents(&spec, 120, 9).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(sample_graph(&spec, &l1, 10).unwrap(), sample_graph(&spec, &l2, 10).unwrap());
    }
}
