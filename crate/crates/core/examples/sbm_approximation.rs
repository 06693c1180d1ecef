// Step-function (block model) approximations of graphons at a given
// L2 accuracy.

use graphon::model::GraphonSpec;
use graphon::oracle::{sbm_approximation, step_graphon_l2_error_quadrature, StepCells};

pub fn run() -> graphon::Result<()> {
    let geo = GraphonSpec::GeometricGraph { d: 1, delta: 0.1 };
    for eps in [0.1, 0.2, 0.3] {
        let a = sbm_approximation(&geo, eps)?;
        let cells = match &a.cells {
            StepCells::Intervals(v) => v.len(),
            StepCells::Communities(v) => v.len(),
        };
        let check = step_graphon_l2_error_quadrature(&geo, &a, 2000)?;
        println!(
            "geometric eps={eps}: {cells} cells, L2 error {:.4} (quadrature {:.4}), bound 4 eps = {:.1}",
            a.l2_error,
            check,
            4.0 * eps
        );
    }

    let sbm = GraphonSpec::Sbm {
        weights: vec![0.4, 0.4, 0.2],
        block_probs: vec![vec![0.8, 0.75, 0.1], vec![0.75, 0.8, 0.1], vec![0.1, 0.1, 0.9]],
    };
    let a = sbm_approximation(&sbm, 0.2)?;
    println!("3-block SBM at eps=0.2 -> {:?}, L2 error {:.4}", a.cells, a.l2_error);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
