use rayon::prelude::*;

use super::gram::InnerProductMatrix;
use crate::error::{invalid, GraphonError, Result};

/// Estimated nearest neighbor `m_hat(i)` of every node.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborIndex {
    pub m_hat: Vec<usize>,
    /// `f_hat(i, m_hat(i))`.
    pub f_hat_at_min: Vec<f64>,
}

#[inline]
fn max_abs_diff(a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0u32, |m, (x, y)| m.max(x.abs_diff(*y)))
}

/// `max_{k != i, j} |c(k, i) - c(k, j)|` in counts, `i < j`.
#[inline]
fn proxy_count(ip: &InnerProductMatrix, i: usize, j: usize) -> u32 {
    let (ri, rj) = (ip.count_row(i), ip.count_row(j));
    max_abs_diff(&ri[..i], &rj[..i])
        .max(max_abs_diff(&ri[i + 1..j], &rj[i + 1..j]))
        .max(max_abs_diff(&ri[j + 1..], &rj[j + 1..]))
}

/// Proxy distance `f_hat(i, j) = max_{k != i, j} |<A_k, A_i - A_j>_n|`.
pub fn proxy_f_hat(ip: &InnerProductMatrix, i: usize, j: usize) -> Result<f64> {
    let n = ip.n();
    if i >= n || j >= n || i == j {
        return invalid(format!("proxy needs distinct indices below {n}, got ({i}, {j})"));
    }
    if n < 3 {
        return Err(GraphonError::DegenerateInstance(
            "proxy maximum is empty for n = 2".into(),
        ));
    }
    let (a, b) = (i.min(j), i.max(j));
    Ok(proxy_count(ip, a, b) as f64 / n as f64)
}

/// `m_hat(i) = argmin_{j != i} f_hat(i, j)`, ties to the smallest `j`.
pub fn nearest_neighbor_index(ip: &InnerProductMatrix) -> Result<NeighborIndex> {
    let n = ip.n();
    if n < 3 {
        return Err(GraphonError::DegenerateInstance(format!(
            "nearest-neighbor index needs n >= 3, got {n}"
        )));
    }
    let upper: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .map(|i| ((i + 1)..n).map(|j| proxy_count(ip, i, j)).collect())
        .collect();
    let mut best = vec![(u32::MAX, usize::MAX); n];
    // visiting j in increasing order per i keeps the smallest index on ties
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let f = if i < j {
                upper[i][j - i - 1]
            } else {
                upper[j][i - j - 1]
            };
            if f < best[i].0 {
                best[i] = (f, j);
            }
        }
    }
    Ok(NeighborIndex {
        m_hat: best.iter().map(|b| b.1).collect(),
        f_hat_at_min: best.iter().map(|b| b.0 as f64 / n as f64).collect(),
    })
}
