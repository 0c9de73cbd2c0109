use super::{Spectrum, SymMatrix};
use crate::error::{Error, Result};

pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Relative threshold on the off-diagonal Frobenius norm.
const CONVERGENCE: f64 = 1e-12;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, returned as
/// a descending [`Spectrum`] clustered at `distinct_tol`.
///
/// Every sweep visits each off-diagonal pair `(p, q)` once and applies the
/// plane rotation that annihilates `a[p][q]`. Iteration stops when the
/// off-diagonal Frobenius norm drops below `1e-12 * max(1, ‖m‖_F)`; failing
/// that within [`JACOBI_MAX_SWEEPS`] sweeps is an error.
pub fn eigenvalues(m: &SymMatrix, distinct_tol: f64) -> Result<Spectrum> {
    let values = jacobi_diagonalize(m)?;
    Ok(Spectrum::from_values(values, distinct_tol))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

fn jacobi_diagonalize(m: &SymMatrix) -> Result<Vec<f64>> {
    let n = m.dim();
    let mut a = m.as_row_major().to_vec();
    let threshold = CONVERGENCE * m.frobenius_norm().max(1.0);

    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::NoConvergence {
            sweeps: 0,
            off_norm: f64::NAN,
        });
    }

    let mut off = off_diagonal_norm(&a, n);
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off < threshold {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        off = off_diagonal_norm(&a, n);
    }
    if off < threshold {
        return Ok((0..n).map(|i| a[i * n + i]).collect());
    }
    Err(Error::NoConvergence {
        sweeps: JACOBI_MAX_SWEEPS,
        off_norm: off,
    })
}

/// Applies `Jᵀ A J` for the rotation zeroing `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // Smaller root of t² + 2θt - 1 = 0, keeping the rotation angle below π/4.
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}
