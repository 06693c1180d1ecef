// Estimate neighborhood distances on a block model and compare them with
// the analytic oracle.

use graphon::estimate::{check_distance_envelope, error_budget, estimate_distances, row_inner_products};
use graphon::model::{sample_graph, sample_latents, GraphonSpec};
use graphon::oracle::{true_distance_matrix, QuadratureConfig};

pub fn run() -> graphon::Result<()> {
    let spec = GraphonSpec::Sbm {
        weights: vec![1.0 / 3.0; 3],
        block_probs: vec![vec![0.9, 0.1, 0.1], vec![0.1, 0.9, 0.1], vec![0.1, 0.1, 0.9]],
    };
    let n = 400;
    let lat = sample_latents(&spec, n, 3)?;
    let a = sample_graph(&spec, &lat, 3)?;

    let ip = row_inner_products(&a);
    println!("<A_0, A_0> = {} = degree/n", ip.value(0, 0));

    let est = estimate_distances(&a)?;
    let oracle = true_distance_matrix(&spec, &lat, &QuadratureConfig::default())?;
    let same = (0..n)
        .filter(|&i| lat.label(i) == lat.label(est.neighbor.m_hat[i]))
        .count();
    println!("m_hat(i) in the same community for {same}/{n} nodes");

    for (i, j) in [(0, 1), (0, 2), (5, 17)] {
        println!(
            "pair ({i},{j}) labels {:?}/{:?}: r^2 = {:.4}, standard = {:.4}, conservative = {:.4}",
            lat.label(i).unwrap(),
            lat.label(j).unwrap(),
            oracle.sq.get(i, j),
            est.sq_standard.get(i, j),
            est.sq_conservative.get(i, j)
        );
    }

    let budget = error_budget(n, Some(&oracle), Some(&est))?;
    println!("{budget:#?}");
    let env = check_distance_envelope(&oracle, &est)?;
    println!(
        "max |r^2 - r_hat^2| = {:.4}, envelope slack {:.4}, satisfied = {}",
        env.max_error, env.min_slack, env.satisfied
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
