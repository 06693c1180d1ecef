use crate::error::{invalid, Result};

/// Symmetric binary adjacency matrix with zero diagonal, stored as one
/// bitset per row.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    rho: f64,
}

impl AdjacencyMatrix {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        AdjacencyMatrix {
            n,
            words,
            bits: vec![0; n * words],
            rho: 1.0,
        }
    }

    /// Builds a graph from undirected edges. Self-loops are rejected,
    /// duplicates are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], rho: f64) -> Result<Self> {
        if !(rho > 0.0 && rho <= 1.0) {
            return invalid(format!("rho = {rho} not in (0, 1]"));
        }
        let mut a = AdjacencyMatrix::empty(n);
        a.rho = rho;
        for &(i, j) in edges {
            if i >= n || j >= n {
                return invalid(format!("edge ({i}, {j}) out of range for n = {n}"));
            }
            if i == j {
                return invalid(format!("self-loop at node {i}"));
            }
            a.insert(i, j);
        }
        Ok(a)
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let mut a = AdjacencyMatrix::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                a.insert(i, j);
            }
        }
        a
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn with_rho(mut self, rho: f64) -> Self {
        self.rho = rho;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Packed bits of row `i`; bit `j % 64` of word `j / 64` is `A_ij`.
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn num_edges(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j` in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| ((i + 1)..self.n).filter(move |&j| self.get(i, j)).map(move |j| (i, j)))
    }

    /// Same graph with node `perm[i]` of `self` renamed to `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut a = AdjacencyMatrix::empty(self.n).with_rho(self.rho);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(perm[i], perm[j]) {
                    a.insert(i, j);
                }
            }
        }
        a
    }

    /// Checks symmetry and the zero diagonal bit for bit.
    pub fn is_valid(&self) -> bool {
        (0..self.n).all(|i| !self.get(i, i) && ((i + 1)..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_degrees() {
        let a = AdjacencyMatrix::complete(70);
        assert!(a.is_valid());
        assert!((0..70).all(|i| a.degree(i) == 69));
        assert_eq!(a.num_edges(), 70 * 69 / 2);
    }

    #[test]
    fn rejects_self_loops_and_bad_rho() {
        assert!(AdjacencyMatrix::from_edges(3, &[(1, 1)], 1.0).is_err());
        assert!(AdjacencyMatrix::from_edges(3, &[(0, 1)], 0.0).is_err());
        assert!(AdjacencyMatrix::from_edges(3, &[(0, 3)], 1.0).is_err());
    }

    #[test]
    fn edges_round_trip() {
        let e = vec![(0, 2), (1, 3), (2, 3)];
        let a = AdjacencyMatrix::from_edges(4, &e, 1.0).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), e);
    }
}
