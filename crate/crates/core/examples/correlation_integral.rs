// Correlation integral of estimated distances, a pair-counting
// alternative to covering numbers.

use graphon::complexity::correlation_integral;
use graphon::estimate::estimate_distances;
use graphon::model::{sample_graph, sample_latents, GraphonSpec};

pub fn run() -> graphon::Result<()> {
    let spec = GraphonSpec::GeometricGraph { d: 1, delta: 0.1 };
    let lat = sample_latents(&spec, 600, 9)?;
    let dist = estimate_distances(&sample_graph(&spec, &lat, 9)?)?.distances();
    let mut prev: Option<(f64, f64)> = None;
    for eps in [0.05, 0.1, 0.2, 0.3, 0.4] {
        let c = correlation_integral(&dist, eps)?;
        match prev {
            Some((pe, pc)) if pc > 0.0 && c > 0.0 => {
                let slope = (c.ln() - pc.ln()) / (eps.ln() - pe.ln());
                println!("eps={eps}: C={c:.4} local slope {slope:.3}");
            }
            _ => println!("eps={eps}: C={c:.4}"),
        }
        prev = Some((eps, c));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
