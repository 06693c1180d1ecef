//! Step-graphon approximation over an `eps`-cover of `(Omega, r_W)`.

use crate::complexity::exact_cover;
use crate::error::{GraphonError, Result};
use crate::matrix::SymMatrix;
use crate::model::GraphonSpec;

/// Cells of the partition behind a step graphon.
#[derive(Debug, Clone, PartialEq)]
pub enum StepCells {
    /// Cell index of every community of the original block model
    /// (`None` for communities of zero weight).
    Communities(Vec<Option<usize>>),
    /// Consecutive intervals partitioning `[0, 1]`.
    Intervals(Vec<(f64, f64)>),
}

#[derive(Debug, Clone)]
pub struct SbmApproximation {
    /// The step graphon, as an SBM over the cells.
    pub spec: GraphonSpec,
    pub cells: StepCells,
    /// `||W - W_bar||_{L2(mu x mu)}`.
    pub l2_error: f64,
}

/// Averages `W` over the Voronoi cells of a minimum `eps`-cover and reports
/// the L2 approximation error, which never exceeds `4 eps`.
///
/// Supported: block models (cover of the community set, ties to the
/// smallest center index) and the one-dimensional geometric graph, whose
/// cover uses the boundary-free distance `r_W^2 = min(2|x - y|, 4 delta)`.
pub fn sbm_approximation(spec: &GraphonSpec, eps: f64) -> Result<SbmApproximation> {
    if !(eps > 0.0) {
        return Err(GraphonError::InvalidArgument(format!("eps = {eps} must be positive")));
    }
    spec.validate()?;
    if let Some(bm) = spec.block_model() {
        let live: Vec<usize> = (0..bm.k()).filter(|&a| bm.weights[a] > 0.0).collect();
        let dist = SymMatrix::from_upper(live.len(), 0.0, |i, j| bm.distance(live[i], live[j]));
        let centers = exact_cover(&dist, eps).centers;
        let mut assign = vec![None; bm.k()];
        for (i, &a) in live.iter().enumerate() {
            let mut cell = 0;
            for (c, &center) in centers.iter().enumerate() {
                if dist.get(i, center) < dist.get(i, centers[cell]) {
                    cell = c;
                }
            }
            assign[a] = Some(cell);
        }
        let m = centers.len();
        let mut mass = vec![0.0; m];
        for &a in &live {
            mass[assign[a].unwrap()] += bm.weights[a];
        }
        let mut probs = vec![vec![0.0; m]; m];
        for ci in 0..m {
            for cj in ci..m {
                let mut s = 0.0;
                for &a in &live {
                    for &b in &live {
                        if assign[a] == Some(ci) && assign[b] == Some(cj) {
                            s += bm.weights[a] * bm.weights[b] * bm.probs[a][b];
                        }
                    }
                }
                let v = (s / (mass[ci] * mass[cj])).clamp(0.0, 1.0);
                probs[ci][cj] = v;
                probs[cj][ci] = v;
            }
        }
        let mut err2 = 0.0;
        for &a in &live {
            for &b in &live {
                let diff = bm.probs[a][b] - probs[assign[a].unwrap()][assign[b].unwrap()];
                err2 += bm.weights[a] * bm.weights[b] * diff * diff;
            }
        }
        let total: f64 = mass.iter().sum();
        let weights = mass.iter().map(|w| w / total).collect();
        return Ok(SbmApproximation {
            spec: GraphonSpec::Sbm {
                weights,
                block_probs: probs,
            },
            cells: StepCells::Communities(assign),
            l2_error: err2.sqrt(),
        });
    }
    match spec {
        GraphonSpec::GeometricGraph { d: 1, delta } => Ok(geometric_line(*delta, eps)),
        _ => Err(GraphonError::UnsupportedOracle(format!(
            "no step-graphon construction for {spec:?}"
        ))),
    }
}

fn geometric_line(delta: f64, eps: f64) -> SbmApproximation {
    // a ball of radius eps < 2 sqrt(delta) is an interval of length eps^2
    let m = if eps * eps >= 4.0 * delta {
        1
    } else {
        (1.0 / (eps * eps)).ceil() as usize
    };
    let cells: Vec<(f64, f64)> = (0..m)
        .map(|k| (k as f64 / m as f64, (k + 1) as f64 / m as f64))
        .collect();
    let mut probs = vec![vec![0.0; m]; m];
    let mut err2 = 0.0;
    for i in 0..m {
        for j in i..m {
            let (a, b) = cells[i];
            let (c, d) = cells[j];
            let vol = (b - a) * (d - c);
            let wbar = (band_area(a, b, c, d, delta) / vol).clamp(0.0, 1.0);
            probs[i][j] = wbar;
            probs[j][i] = wbar;
            let contrib = vol * wbar * (1.0 - wbar);
            err2 += if i == j { contrib } else { 2.0 * contrib };
        }
    }
    SbmApproximation {
        spec: GraphonSpec::Sbm {
            weights: vec![1.0 / m as f64; m],
            block_probs: probs,
        },
        cells: StepCells::Intervals(cells),
        l2_error: err2.sqrt(),
    }
}

/// Area of `{(x, y) in [a,b] x [c,d] : |x - y| <= delta}`. The section
/// length in `y` is piecewise linear in `x`, so the trapezoid rule over
/// its breakpoints is exact.
fn band_area(a: f64, b: f64, c: f64, d: f64, delta: f64) -> f64 {
    let section = |x: f64| ((x + delta).min(d) - (x - delta).max(c)).max(0.0);
    let mut knots = vec![a, b];
    knots.extend([c - delta, c + delta, d - delta, d + delta].into_iter().filter(|&t| t > a && t < b));
    knots.sort_by(f64::total_cmp);
    knots
        .windows(2)
        .map(|w| 0.5 * (w[1] - w[0]) * (section(w[0]) + section(w[1])))
        .sum()
}

/// Midpoint-rule estimate of `||W - W_bar||_{L2}` on a `grid x grid`
/// lattice, independent of the closed-form error above.
pub fn step_graphon_l2_error_quadrature(original: &GraphonSpec, approx: &SbmApproximation, grid: usize) -> Result<f64> {
    let (GraphonSpec::GeometricGraph { d: 1, delta }, StepCells::Intervals(cells), GraphonSpec::Sbm { block_probs, .. }) =
        (original, &approx.cells, &approx.spec)
    else {
        return Err(GraphonError::UnsupportedOracle(
            "quadrature check implemented for the one-dimensional geometric graph".into(),
        ));
    };
    let h = 1.0 / grid as f64;
    let cell_of = |x: f64| cells.iter().position(|&(_, hi)| x < hi).unwrap_or(cells.len() - 1);
    let idx: Vec<usize> = (0..grid).map(|k| cell_of((k as f64 + 0.5) * h)).collect();
    let mut s = 0.0;
    for (kx, &cx) in idx.iter().enumerate() {
        let x = (kx as f64 + 0.5) * h;
        for (ky, &cy) in idx.iter().enumerate() {
            let y = (ky as f64 + 0.5) * h;
            let w = if (x - y).abs() <= *delta { 1.0 } else { 0.0 };
            let diff = w - block_probs[cx][cy];
            s += diff * diff;
        }
    }
    Ok((s * h * h).sqrt())
}
