// Covering curve -log N(eps) / log eps over 101 radii on a geometric graph
// with n = 1000, on estimated and on true distances. Writes
// `figure1.csv` in the current directory when run as a binary.

use graphon::experiments::{run_experiment, run_figure1, ExperimentKind, ExperimentPlan};

pub fn run() -> graphon::Result<String> {
    let plan = ExperimentPlan::new("figure1", ExperimentKind::Figure1, "geometric", vec![1000], 1);
    let fig = run_figure1(&plan)?;
    for k in (0..fig.estimated.rows.len()).step_by(10) {
        let (e, o) = (fig.estimated.rows[k], fig.oracle.rows[k]);
        println!(
            "eps={:.3}  estimated N={:4} dim={:.3}  true N={:4} dim={:.3}",
            e.eps, e.cov_size, e.dim_value, o.cov_size, o.dim_value
        );
    }
    println!("estimated plateau: {:?}", fig.estimated.plateau);
    println!("true plateau:      {:?}", fig.oracle.plateau);
    Ok(run_experiment(&plan)?.0)
}

#[allow(dead_code)]
fn main() {
    let csv = run().unwrap();
    std::fs::write("figure1.csv", csv).unwrap();
}
