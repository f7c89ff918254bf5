//! Dense kernels: largest singular value and smallest Hermitian eigenvalue
//! of a [`FiniteMatrix`].
//!
//! Both kernels are direct (bidiagonalization / tridiagonalization followed
//! by implicit QR sweeps) and therefore reproducible bit for bit; the
//! iteration cap in [`Tolerance`] bounds the QR sweeps.

use nalgebra::linalg::{SymmetricEigen, SVD};

use crate::error::{Error, Result};
use crate::model::FiniteMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    pub max_iter: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: 1e-10,
            abs: 1e-12,
            max_iter: 100_000,
        }
    }
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64, max_iter: usize) -> Result<Self> {
        if !(rel > 0.0 && abs > 0.0 && max_iter > 0) {
            return Err(Error::Precondition(
                "tolerances and the iteration cap must be positive".into(),
            ));
        }
        Ok(Tolerance { rel, abs, max_iter })
    }
}

fn failure(m: &FiniteMatrix, tol: &Tolerance) -> Error {
    let (rows, cols) = m.shape();
    Error::NumericFailure {
        rows,
        cols,
        max_iter: tol.max_iter,
    }
}

/// Largest singular value of `m`.
pub fn spectral_norm(m: &FiniteMatrix, tol: &Tolerance) -> Result<f64> {
    if m.is_empty() {
        return Err(Error::Precondition("spectral norm of an empty matrix".into()));
    }
    let m = m.compact();
    match m.shape() {
        (0, _) | (_, 0) => Ok(0.0),
        (1, 1) => Ok(m.get(0, 0).norm()),
        // A single row or column: the Euclidean length.
        (1, _) | (_, 1) => Ok(m.data().iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()),
        _ => {
            let svd = SVD::try_new(m.to_dmatrix(), false, false, f64::EPSILON, tol.max_iter)
                .ok_or_else(|| failure(&m, tol))?;
            Ok(svd.singular_values.max())
        }
    }
}

/// Checks `m` is square over one index list and Hermitian within `tol.abs`.
pub fn check_hermitian(m: &FiniteMatrix, tol: &Tolerance) -> Result<()> {
    if m.rows() != m.cols() {
        return Err(Error::Precondition(
            "Hermitian kernel needs identical row and column index lists".into(),
        ));
    }
    let n = m.shape().0;
    for i in 0..n {
        for j in 0..=i {
            if (m.get(i, j) - m.get(j, i).conj()).norm() > tol.abs {
                return Err(Error::NotHermitian {
                    row: m.rows()[i].0,
                    col: m.cols()[j].0,
                });
            }
        }
    }
    Ok(())
}

/// Smallest eigenvalue of a Hermitian `m`.
pub fn min_eig_hermitian(m: &FiniteMatrix, tol: &Tolerance) -> Result<f64> {
    check_hermitian(m, tol)?;
    let n = m.shape().0;
    match n {
        0 => Err(Error::Precondition("eigenvalue of an empty matrix".into())),
        1 => Ok(m.get(0, 0).re),
        _ => {
            let eig = SymmetricEigen::try_new(m.to_dmatrix(), f64::EPSILON, tol.max_iter)
                .ok_or_else(|| failure(m, tol))?;
            Ok(eig.eigenvalues.min())
        }
    }
}
