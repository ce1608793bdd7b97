use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::echelon::rref;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense square matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Scalar> {
    dim: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn from_rows(rows: Vec<Vec<F>>, ctx: F::Ctx) -> Result<Matrix<F>> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch(0, 1));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(row.len(), dim));
            }
            data.extend(row);
        }
        Ok(Matrix { dim, ctx, data })
    }

    pub fn from_fn(dim: usize, ctx: F::Ctx, mut f: impl FnMut(usize, usize) -> F) -> Matrix<F> {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Matrix { dim, ctx, data }
    }

    pub fn identity(dim: usize, ctx: F::Ctx) -> Matrix<F> {
        let (zero, one) = (F::zero(&ctx), F::one(&ctx));
        Matrix::from_fn(dim, ctx, |r, c| if r == c { one.clone() } else { zero.clone() })
    }

    pub fn zero(dim: usize, ctx: F::Ctx) -> Matrix<F> {
        let zero = F::zero(&ctx);
        Matrix::from_fn(dim, ctx, |_, _| zero.clone())
    }

    pub fn diagonal(entries: Vec<F>, ctx: F::Ctx) -> Matrix<F> {
        let zero = F::zero(&ctx);
        let n = entries.len();
        Matrix::from_fn(n, ctx, |r, c| if r == c { entries[r].clone() } else { zero.clone() })
    }

    /// `I_offset ⊕ block ⊕ I_rest` inside a `dim × dim` identity.
    pub fn embed(dim: usize, offset: usize, block: &Matrix<F>) -> Result<Matrix<F>> {
        if offset + block.dim > dim {
            return Err(Error::DimensionMismatch(offset + block.dim, dim));
        }
        let mut m = Matrix::identity(dim, block.ctx.clone());
        for r in 0..block.dim {
            for c in 0..block.dim {
                m.data[(offset + r) * dim + offset + c] = block.get(r, c).clone();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.dim + c] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.dim..(r + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        (0..self.dim).map(|r| self.row(r).to_vec()).collect()
    }

    /// Sub-block of size `size` starting at `(offset, offset)`.
    pub fn block(&self, offset: usize, size: usize) -> Matrix<F> {
        Matrix::from_fn(size, self.ctx.clone(), |r, c| {
            self.get(offset + r, offset + c).clone()
        })
    }

    pub fn map<G: Scalar>(&self, ctx: G::Ctx, mut f: impl FnMut(&F) -> Result<G>) -> Result<Matrix<G>> {
        let data = self.data.iter().map(&mut f).collect::<Result<Vec<G>>>()?;
        Ok(Matrix {
            dim: self.dim,
            ctx,
            data,
        })
    }

    fn check_dim(&self, other: &Matrix<F>) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_dim(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub(crate) fn mul_unchecked(&self, rhs: &Matrix<F>) -> Matrix<F> {
        let n = self.dim;
        let zero = F::zero(&self.ctx);
        let mut data = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let one = a.is_one();
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = if one { b.clone() } else { a.times(b) };
                    let slot = &mut data[i * n + j];
                    *slot = if slot.is_zero() { prod } else { slot.plus(&prod) };
                }
            }
        }
        Matrix {
            dim: n,
            ctx: self.ctx.clone(),
            data,
        }
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_dim(rhs)?;
        Ok(self.zip(rhs, |a, b| a.plus(b)))
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_dim(rhs)?;
        Ok(self.zip(rhs, |a, b| a.minus(b)))
    }

    fn zip(&self, rhs: &Matrix<F>, f: impl Fn(&F, &F) -> F) -> Matrix<F> {
        Matrix {
            dim: self.dim,
            ctx: self.ctx.clone(),
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: &F) -> Matrix<F> {
        Matrix {
            dim: self.dim,
            ctx: self.ctx.clone(),
            data: self.data.iter().map(|a| a.times(k)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix<F> {
        Matrix {
            dim: self.dim,
            ctx: self.ctx.clone(),
            data: self.data.iter().map(F::negated).collect(),
        }
    }

    pub fn apply(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(v.len(), self.dim));
        }
        Ok((0..self.dim)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(F::zero(&self.ctx), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value().map(|s| s.is_one()).unwrap_or(false)
    }

    /// `Some(s)` when the matrix is `s·I`.
    pub fn scalar_value(&self) -> Option<F> {
        let s = self.get(0, 0).clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                let v = self.get(r, c);
                let ok = if r == c { *v == s } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(s)
    }

    /// First entry (row-major) where `self` and `rhs` differ.
    pub fn first_difference(&self, rhs: &Matrix<F>) -> Option<(usize, usize, F)> {
        if self.dim != rhs.dim {
            return Some((0, 0, F::one(&self.ctx)));
        }
        self.data
            .iter()
            .zip(&rhs.data)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.dim, i % self.dim, self.data[i].minus(&rhs.data[i])))
    }

    pub fn is_involution(&self) -> bool {
        self.mul_unchecked(self).is_identity()
    }

    pub fn determinant(&self) -> F {
        let n = self.dim;
        let mut rows = self.rows();
        let mut det = F::one(&self.ctx);
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !rows[r][col].is_zero()) {
                Some(p) => p,
                None => return F::zero(&self.ctx),
            };
            if pivot != col {
                rows.swap(pivot, col);
                det = det.negated();
            }
            let p = rows[col][col].clone();
            det = det.times(&p);
            let pinv = p.inverse().expect("nonzero pivot");
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].times(&pinv);
                for c in col..n {
                    let sub = factor.times(&rows[col][c]);
                    rows[r][c] = rows[r][c].minus(&sub);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        let n = self.dim;
        let zero = F::zero(&self.ctx);
        let one = F::one(&self.ctx);
        let mut rows: Vec<Vec<F>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { one.clone() } else { zero.clone() }));
                row
            })
            .collect();
        let pivots = rref(&mut rows, n);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::SingularMatrix);
        }
        let data = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Ok(Matrix {
            dim: n,
            ctx: self.ctx.clone(),
            data,
        })
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        rref(&mut rows, self.dim).len()
    }

    /// Null space `{v : A v = 0}`.
    pub fn kernel_basis(&self) -> Subspace<F> {
        let n = self.dim;
        let mut rows = self.rows();
        let pivots = rref(&mut rows, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(&self.ctx); n];
                v[f] = F::one(&self.ctx);
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = rows[i][f].negated();
                }
                v
            })
            .collect();
        Subspace::from_vectors(n, vectors, self.ctx.clone())
    }

    /// Eigenspace `ker(A - lam·I)`, possibly zero-dimensional.
    pub fn eigenspace(&self, lam: &F) -> Subspace<F> {
        let shifted = self.sub(&Matrix::identity(self.dim, self.ctx.clone()).scale(lam))
            .expect("same dimension");
        shifted.kernel_basis()
    }

    /// `P⁻¹ A P`.
    pub fn conjugate(&self, p: &Matrix<F>) -> Result<Matrix<F>> {
        self.check_dim(p)?;
        Ok(p.inverse()?.mul_unchecked(self).mul_unchecked(p))
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.dim {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Scalar> Serialize for Matrix<F> {
    /// Row-major array of rows of scalar strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim))?;
        for r in 0..self.dim {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
