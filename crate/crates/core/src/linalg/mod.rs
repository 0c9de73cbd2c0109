//! Dense symmetric matrices, a cyclic Jacobi eigensolver, eigenvalue
//! clustering and real polynomials.

mod jacobi;
mod poly;
mod spectrum;

use std::ops::{Add, Sub};

use crate::error::{Error, Result};

pub use jacobi::{eigenvalues, JACOBI_MAX_SWEEPS};
pub use poly::Polynomial;
pub use spectrum::{cluster_distinct, Cluster, Spectrum, DEFAULT_DISTINCT_TOL};

/// Dense real symmetric matrix in full row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> SymMatrix {
        SymMatrix {
            dim,
            entries: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> SymMatrix {
        SymMatrix::from_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// Builds a matrix by evaluating `f(i, j)` for `i <= j` and mirroring.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> SymMatrix {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let x = f(i, j);
                m.entries[i * dim + j] = x;
                m.entries[j * dim + i] = x;
            }
        }
        m
    }

    /// Wraps row-major entries, rejecting anything not exactly symmetric.
    pub fn from_row_major(dim: usize, entries: Vec<f64>) -> Result<SymMatrix> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn as_row_major(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scale(&self, factor: f64) -> SymMatrix {
        SymMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    /// `self + shift * I`.
    pub fn shift_diagonal(&self, shift: f64) -> SymMatrix {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.entries[i * self.dim + i] += shift;
        }
        out
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        max_abs(&self.entries)
    }

    fn zip_with(&self, other: &SymMatrix, f: impl Fn(f64, f64) -> f64) -> SymMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        SymMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &SymMatrix {
    type Output = SymMatrix;

    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &SymMatrix {
    type Output = SymMatrix;

    fn sub(self, rhs: &SymMatrix) -> SymMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |acc: f64, x| acc.max(x.abs()))
}

/// `v vᵀ`.
pub fn outer_product(v: &[f64]) -> SymMatrix {
    SymMatrix::from_fn(v.len(), |i, j| v[i] * v[j])
}

/// `∏ (m - r I)` over `roots`, multiplied left to right, as a row-major
/// square matrix. The empty product is the identity.
pub fn matrix_polynomial(m: &SymMatrix, roots: &[f64]) -> Vec<f64> {
    let n = m.dim();
    let mut acc = SymMatrix::identity(n).entries;
    let mut scratch = vec![0.0; n * n];
    for &r in roots {
        let factor = m.shift_diagonal(-r);
        for i in 0..n {
            for j in 0..n {
                scratch[i * n + j] = (0..n).map(|k| acc[i * n + k] * factor.get(k, j)).sum();
            }
        }
        std::mem::swap(&mut acc, &mut scratch);
    }
    acc
}

/// Max-absolute-entry of `∏ (m - r I) - target`.
pub fn matrix_polynomial_residual(m: &SymMatrix, roots: &[f64], target: &SymMatrix) -> f64 {
    assert_eq!(m.dim(), target.dim(), "matrix dimensions differ");
    matrix_polynomial(m, roots)
        .iter()
        .zip(target.as_row_major())
        .fold(0.0, |acc: f64, (a, b)| acc.max((a - b).abs()))
}
