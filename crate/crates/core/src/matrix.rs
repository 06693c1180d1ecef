//! Dense symmetric matrices used for distances.

use crate::error::{invalid, Result};

/// Dense symmetric `n x n` matrix of `f64`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds the matrix from a function evaluated on the upper triangle
    /// (`i < j`); the diagonal is set to `diag`.
    pub fn from_upper(n: usize, diag: f64, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = diag;
            for j in (i + 1)..n {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    /// Wraps a row-major buffer, checking shape and exact symmetry.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return invalid(format!("expected {} entries, got {}", n * n, data.len()));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (data[i * n + j], data[j * n + i]);
                if a != b && !(a.is_nan() && b.is_nan()) {
                    return invalid(format!("matrix not symmetric at ({i}, {j})"));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    /// Euclidean distances between points on the real line.
    pub fn from_line_points(points: &[f64]) -> Self {
        SymMatrix::from_upper(points.len(), 0.0, |i, j| (points[i] - points[j]).abs())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Applies `f` entrywise, keeping symmetry.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Largest off-diagonal entry (0 for n < 2).
    pub fn max_off_diagonal(&self) -> f64 {
        let mut m = f64::NEG_INFINITY;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                m = m.max(self.get(i, j));
            }
        }
        if m.is_finite() {
            m
        } else {
            0.0
        }
    }

    /// Relabels points: entry `(i, j)` of the result is entry
    /// `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> SymMatrix {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        SymMatrix { n, data }
    }
}
