// The five-community block model used in the minimax lower bound.

use graphon::model::lower_bound_sbm;

pub fn run() -> graphon::Result<()> {
    let spec = lower_bound_sbm(50_002, 0.02)?;
    let bm = spec.block_model().expect("finite latent space");
    println!("weights {:?}", bm.weights);
    for row in &bm.probs {
        println!("  {}", row.iter().map(|p| format!("{p:.4}")).collect::<Vec<_>>().join(" "));
    }
    for a in 0..5 {
        let row: Vec<String> = (0..5).map(|b| format!("{:.4}", bm.distance(a, b))).collect();
        println!("r_W(C{}, .) = {}", a + 1, row.join(" "));
    }
    println!("n_ref=802 admissible: {}", lower_bound_sbm(802, 0.02).is_ok());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
