//! Dense exact linear algebra over any [`Scalar`](crate::scalar::Scalar).

mod closure;
mod echelon;
mod matrix;
mod subspace;

pub use closure::algebra_closure_dim;
pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::scalar::{Rational, RatFunc, Scalar};

/// Parses a row-major list of entry strings into a symbolic matrix.
pub fn ratfunc_matrix(rows: &[&[&str]]) -> Result<Matrix<RatFunc>> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<RatFunc>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows, ())
}

/// Integer matrix over any field.
pub fn int_matrix<F: Scalar>(rows: &[&[i64]], ctx: F::Ctx) -> Result<Matrix<F>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(rows.first().map_or(0, |r| r.len()), n));
    }
    Ok(Matrix::from_fn(n, ctx.clone(), |r, c| F::from_int(rows[r][c], &ctx)))
}

/// Rational-valued matrix from integer entries.
pub fn rational_matrix(rows: &[&[i64]]) -> Result<Matrix<Rational>> {
    int_matrix(rows, ())
}
