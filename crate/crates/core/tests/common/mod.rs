#![allow(dead_code)]

use graphon::model::AdjacencyMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_graph(n: usize, p: f64, seed: u64) -> AdjacencyMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    AdjacencyMatrix::from_edges(n, &edges, 1.0).unwrap()
}

pub fn dense(a: &AdjacencyMatrix) -> Vec<Vec<u32>> {
    (0..a.n()).map(|i| (0..a.n()).map(|j| a.get(i, j) as u32).collect()).collect()
}

/// `sum_k A_ik A_jk` by the triple loop.
pub fn gram_brute(a: &AdjacencyMatrix) -> Vec<Vec<u32>> {
    let m = dense(a);
    let n = a.n();
    let mut g = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                g[i][j] += m[i][k] * m[j][k];
            }
        }
    }
    g
}

/// `max_{k != i,j} |<A_k, A_i - A_j>|` in counts.
pub fn proxy_brute(m: &[Vec<u32>], i: usize, j: usize) -> i64 {
    let n = m.len();
    let mut best = 0i64;
    for k in 0..n {
        if k == i || k == j {
            continue;
        }
        let s: i64 = (0..n).map(|l| m[k][l] as i64 * (m[i][l] as i64 - m[j][l] as i64)).sum();
        best = best.max(s.abs());
    }
    best
}

pub fn argmin_brute(m: &[Vec<u32>]) -> Vec<usize> {
    let n = m.len();
    (0..n)
        .map(|i| {
            let mut best = (i64::MAX, usize::MAX);
            for j in 0..n {
                if j != i {
                    let f = proxy_brute(m, i, j);
                    if f < best.0 {
                        best = (f, j);
                    }
                }
            }
            best.1
        })
        .collect()
}

pub fn binomial_sigma(p: f64, trials: usize) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}
