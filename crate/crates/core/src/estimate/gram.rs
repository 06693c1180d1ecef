use rayon::prelude::*;

use crate::model::AdjacencyMatrix;

/// Row inner products `<A_i, A_j>_n = (sum_k A_ik A_jk) / n`, kept as
/// integer co-occurrence counts.
#[derive(Debug, Clone, PartialEq)]
pub struct InnerProductMatrix {
    n: usize,
    counts: Vec<u32>,
}

impl InnerProductMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of common neighbors of `i` and `j` (degree on the diagonal).
    #[inline]
    pub fn count(&self, i: usize, j: usize) -> u32 {
        self.counts[i * self.n + j]
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.count(i, j) as f64 / self.n as f64
    }

    pub(crate) fn count_row(&self, i: usize) -> &[u32] {
        &self.counts[i * self.n..(i + 1) * self.n]
    }
}

/// Gram matrix of the rows of `a`, divided by `n`. The sum runs over every
/// `k`; the zero diagonal of `a` removes the self terms.
pub fn row_inner_products(a: &AdjacencyMatrix) -> InnerProductMatrix {
    let n = a.n();
    let upper: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let ri = a.row_words(i);
            (i..n)
                .map(|j| {
                    ri.iter()
                        .zip(a.row_words(j))
                        .map(|(x, y)| (x & y).count_ones())
                        .sum()
                })
                .collect()
        })
        .collect();
    let mut counts = vec![0u32; n * n];
    for (i, row) in upper.iter().enumerate() {
        for (off, &c) in row.iter().enumerate() {
            let j = i + off;
            counts[i * n + j] = c;
            counts[j * n + i] = c;
        }
    }
    InnerProductMatrix { n, counts }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        let ip = row_inner_products(&AdjacencyMatrix::empty(5));
        assert!((0..5).all(|i| (0..5).all(|j| ip.value(i, j) == 0.0)));
    }

    #[test]
    fn complete_graph() {
        let ip = row_inner_products(&AdjacencyMatrix::complete(4));
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 0.75 } else { 0.5 };
                assert_eq!(ip.value(i, j), want);
            }
        }
    }
}
