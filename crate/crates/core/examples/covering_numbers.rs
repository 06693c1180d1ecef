// Covering and packing numbers: greedy against exact on a small point set,
// then the plug-in covering number of a sampled block model.

use graphon::complexity::{covering_estimate, exact_cover, exact_packing, greedy_cover, greedy_packing, CoverMode};
use graphon::estimate::estimate_distances;
use graphon::model::{sample_graph, sample_latents, GraphonSpec};
use graphon::SymMatrix;

pub fn run() -> graphon::Result<()> {
    let points = [0.0, 0.05, 0.3, 0.32, 0.6, 0.61, 0.64, 0.9];
    let dist = SymMatrix::from_line_points(&points);
    for eps in [0.02, 0.1, 0.2, 0.4] {
        let g = greedy_cover(&dist, eps);
        let e = exact_cover(&dist, eps);
        let gp = greedy_packing(&dist, eps);
        let ep = exact_packing(&dist, eps);
        assert!(g.verify(&dist) && e.verify(&dist) && gp.verify(&dist) && ep.verify(&dist));
        println!(
            "eps={eps}: cover greedy {} exact {} | packing greedy {} exact {}",
            g.size, e.size, gp.size, ep.size
        );
    }

    let spec = GraphonSpec::Sbm {
        weights: vec![1.0 / 3.0; 3],
        block_probs: vec![vec![0.9, 0.1, 0.1], vec![0.1, 0.9, 0.1], vec![0.1, 0.1, 0.9]],
    };
    let lat = sample_latents(&spec, 300, 11)?;
    let est = estimate_distances(&sample_graph(&spec, &lat, 11)?)?;
    for mode in [CoverMode::Greedy, CoverMode::Exact] {
        let c = covering_estimate(&est, 0.25, mode)?;
        println!("SBM with 3 communities, eps=0.25, {:?}: N_hat = {}", mode, c.size);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
