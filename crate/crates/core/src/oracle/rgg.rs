//! Neighborhood distance of the random geometric graph.

use rand::Rng;

use super::beta::{inc_beta_reg, unit_ball_volume};
use super::distances::QuadratureConfig;
use crate::error::{invalid, Result};
use crate::rng::keyed_rng;

const MC_TAG: u64 = 0x4d43_5247_4700_0004;

fn check_domain(d: usize, delta: f64, e: f64) -> Result<()> {
    if d == 0 {
        return invalid("dimension must be positive");
    }
    if !(delta > 0.0 && delta < 1.0) {
        return invalid(format!("delta = {delta} not in (0, 1)"));
    }
    if !(e >= 0.0) || !e.is_finite() {
        return invalid(format!("separation e = {e} must be finite and >= 0"));
    }
    Ok(())
}

/// Squared neighborhood distance `r_W^2` between two points at Euclidean
/// separation `e`, for `W(x, y) = 1{|x - y| <= delta}` on `R^d` (the cube
/// boundary is ignored).
///
/// Equals the volume of the symmetric difference of two `delta`-balls:
/// `2 V_d delta^d I_x(1/2, (d+1)/2)` with `x = (e / 2 delta)^2`, saturating at
/// `2 V_d delta^d` once the balls are disjoint.
pub fn rgg_distance(d: usize, delta: f64, e: f64) -> Result<f64> {
    check_domain(d, delta, e)?;
    let full = 2.0 * unit_ball_volume(d) * delta.powi(d as i32);
    if e > 2.0 * delta {
        return Ok(full);
    }
    let x = (e / (2.0 * delta)).powi(2);
    Ok(full * inc_beta_reg(0.5, (d as f64 + 1.0) / 2.0, x))
}

/// Elementary closed form of [`rgg_distance`] for `d = 3`.
pub fn rgg_distance_closed_d3(delta: f64, e: f64) -> Result<f64> {
    check_domain(3, delta, e)?;
    if e >= 2.0 * delta {
        return Ok(8.0 * std::f64::consts::PI * delta.powi(3) / 3.0);
    }
    Ok(2.0 * std::f64::consts::PI * (delta * delta - e * e / 12.0) * e)
}

/// Monte-Carlo estimate of the symmetric-difference volume in `R^d`.
/// Returns `(estimate, standard_error)`.
pub fn rgg_distance_monte_carlo(d: usize, delta: f64, e: f64, samples: usize, seed: u64) -> Result<(f64, f64)> {
    check_domain(d, delta, e)?;
    if samples == 0 {
        return invalid("need at least one Monte-Carlo sample");
    }
    // x at the origin, y at (e, 0, ..., 0); sample the bounding box of both balls.
    let lo0 = -delta;
    let hi0 = e + delta;
    let box_vol = (hi0 - lo0) * (2.0 * delta).powi(d as i32 - 1);
    let mut rng = keyed_rng(seed, MC_TAG, d as u64);
    let d2 = delta * delta;
    let mut hits = 0usize;
    let mut z = vec![0.0; d];
    for _ in 0..samples {
        z[0] = lo0 + (hi0 - lo0) * rng.random::<f64>();
        for zk in z.iter_mut().skip(1) {
            *zk = -delta + 2.0 * delta * rng.random::<f64>();
        }
        let rest: f64 = z.iter().skip(1).map(|v| v * v).sum();
        let in_x = z[0] * z[0] + rest <= d2;
        let in_y = (z[0] - e) * (z[0] - e) + rest <= d2;
        if in_x != in_y {
            hits += 1;
        }
    }
    let frac = hits as f64 / samples as f64;
    let se = box_vol * (frac * (1.0 - frac) / samples as f64).sqrt();
    Ok((box_vol * frac, se))
}

fn interval_in_unit(c: f64, delta: f64) -> (f64, f64) {
    ((c - delta).max(0.0), (c + delta).min(1.0))
}

/// Squared neighborhood distance on the cube itself, boundary included:
/// the volume of `(B(x, delta) xor B(y, delta)) ∩ [0,1]^d`. Exact for
/// `d = 1`, midpoint quadrature for `d = 2`, Monte-Carlo otherwise.
/// Returns `(value, error_estimate)`.
pub fn geometric_distance_in_cube(
    d: usize,
    delta: f64,
    x: &[f64],
    y: &[f64],
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    check_domain(d, delta, 0.0)?;
    if x.len() != d || y.len() != d {
        return invalid("point dimension does not match d");
    }
    match d {
        1 => {
            let (a0, a1) = interval_in_unit(x[0], delta);
            let (b0, b1) = interval_in_unit(y[0], delta);
            let inter = (a1.min(b1) - a0.max(b0)).max(0.0);
            Ok(((a1 - a0) + (b1 - b0) - 2.0 * inter, 0.0))
        }
        2 => {
            let fine = grid_xor_area(delta, x, y, 2 * cfg.grid_points);
            let coarse = grid_xor_area(delta, x, y, cfg.grid_points);
            Ok((fine, (fine - coarse).abs()))
        }
        _ => {
            let mut rng = keyed_rng(cfg.seed, MC_TAG, 1000 + d as u64);
            let d2 = delta * delta;
            let mut hits = 0usize;
            let mut z = vec![0.0; d];
            for _ in 0..cfg.mc_samples {
                z.iter_mut().for_each(|v| *v = rng.random::<f64>());
                let dx: f64 = z.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum();
                let dy: f64 = z.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum();
                if (dx <= d2) != (dy <= d2) {
                    hits += 1;
                }
            }
            let m = cfg.mc_samples as f64;
            let p = hits as f64 / m;
            Ok((p, (p * (1.0 - p) / m).sqrt()))
        }
    }
}

fn grid_xor_area(delta: f64, x: &[f64], y: &[f64], g: usize) -> f64 {
    let h = 1.0 / g as f64;
    let d2 = delta * delta;
    let mut hits = 0usize;
    for a in 0..g {
        let z0 = (a as f64 + 0.5) * h;
        for b in 0..g {
            let z1 = (b as f64 + 0.5) * h;
            let dx = (z0 - x[0]).powi(2) + (z1 - x[1]).powi(2);
            let dy = (z0 - y[0]).powi(2) + (z1 - y[1]).powi(2);
            if (dx <= d2) != (dy <= d2) {
                hits += 1;
            }
        }
    }
    hits as f64 * h * h
}
