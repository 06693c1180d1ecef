// Neighborhood distance of the random geometric graph: incomplete-beta
// formula, the d = 3 closed form and Monte-Carlo integration.

use graphon::oracle::{rgg_distance, rgg_distance_closed_d3, rgg_distance_monte_carlo, unit_ball_volume};

pub fn run() -> graphon::Result<()> {
    let delta = 0.1;
    for d in 1..=4 {
        println!("d={d}: V_d = {:.6}, saturation 2 V_d delta^d = {:.3e}", unit_ball_volume(d), 2.0 * unit_ball_volume(d) * 0.1f64.powi(d as i32));
    }
    for e in [0.01, 0.05, 0.1, 0.19, 0.3] {
        let beta = rgg_distance(3, delta, e)?;
        let closed = rgg_distance_closed_d3(delta, e)?;
        let (mc, se) = rgg_distance_monte_carlo(3, delta, e, 200_000, 1)?;
        println!("d=3 e={e}: beta {beta:.6e} closed {closed:.6e} monte-carlo {mc:.6e} +- {se:.1e}");
    }
    println!("d=1 e=0.05: {} (= 2e)", rgg_distance(1, delta, 0.05)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
