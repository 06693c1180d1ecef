// Minkowski dimension of a random geometric graph on [0,1]; the target
// value is 2.

use graphon::complexity::{dimension_radius, estimate_dimension};
use graphon::estimate::estimate_distances;
use graphon::model::{sample_graph, sample_latents, GraphonSpec};
use graphon::oracle::reference_dimension;

pub fn run() -> graphon::Result<()> {
    let spec = GraphonSpec::GeometricGraph { d: 1, delta: 0.1 };
    println!("reference dimension {:?}", reference_dimension(&spec));
    for n in [250, 500, 1000] {
        let lat = sample_latents(&spec, n, 5)?;
        let est = estimate_distances(&sample_graph(&spec, &lat, 5)?)?;
        let d = estimate_dimension(&est, 2.0, 1.0)?;
        assert_eq!(d.radius_used, dimension_radius(n, 2.0, 1.0)?);
        println!(
            "n={n}: eps_D={:.4} N_hat={} dim_hat={:.3}",
            d.radius_used, d.cov_estimate, d.value
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
