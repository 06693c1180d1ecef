// Distance estimation on a thinned graph: admissibility of rho and the
// rescaled error envelope.

use graphon::complexity::{dimension_radius, dimension_radius_sparse};
use graphon::estimate::{check_distance_envelope, estimate_distances, sparse_rho_check};
use graphon::model::{sample_graph, sample_latents, sparsify, GraphonSpec};
use graphon::oracle::{true_distance_matrix, QuadratureConfig};

pub fn run() -> graphon::Result<()> {
    let spec = GraphonSpec::Sbm {
        weights: vec![0.5, 0.5],
        block_probs: vec![vec![0.9, 0.1], vec![0.1, 0.9]],
    };
    let n = 1000;
    for rho in [1.0, 0.5, 0.2, 0.1] {
        let check = sparse_rho_check(n, rho)?;
        let lat = sample_latents(&spec, n, 4)?;
        let a = sparsify(&sample_graph(&spec, &lat, 4)?, rho, 4)?;
        let est = estimate_distances(&a)?;
        let oracle = true_distance_matrix(&spec, &lat, &QuadratureConfig::default())?;
        let env = check_distance_envelope(&oracle, &est)?;
        println!(
            "rho={rho}: admissible={} (threshold {:.4}) max |rho^2 r^2 - r_hat^2| = {:.4} envelope ok = {}",
            check.admissible, check.threshold, env.max_error, env.satisfied
        );
        println!(
            "  dimension radius dense {:.4} sparse {:.4}",
            dimension_radius(n, 2.0, 1.0)?,
            dimension_radius_sparse(n, 2.0, rho, 1.0)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
