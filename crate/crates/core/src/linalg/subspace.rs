use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::echelon::rref;
use super::matrix::Matrix;
use crate::scalar::Scalar;

/// Linear subspace of `F^n`, stored by its reduced row echelon basis so that
/// equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F: Scalar> {
    ambient_dim: usize,
    ctx: F::Ctx,
    basis: Vec<Vec<F>>,
}

impl<F: Scalar> Subspace<F> {
    pub fn from_vectors(ambient_dim: usize, mut vectors: Vec<Vec<F>>, ctx: F::Ctx) -> Subspace<F> {
        assert!(vectors.iter().all(|v| v.len() == ambient_dim), "vector length");
        rref(&mut vectors, ambient_dim);
        Subspace {
            ambient_dim,
            ctx,
            basis: vectors,
        }
    }

    pub fn zero(ambient_dim: usize, ctx: F::Ctx) -> Subspace<F> {
        Subspace {
            ambient_dim,
            ctx,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize, ctx: F::Ctx) -> Subspace<F> {
        let id = Matrix::<F>::identity(ambient_dim, ctx.clone());
        Subspace::from_vectors(ambient_dim, id.rows(), ctx)
    }

    pub fn line(v: Vec<F>, ctx: F::Ctx) -> Subspace<F> {
        Subspace::from_vectors(v.len(), vec![v], ctx)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(&mut rows, self.ambient_dim).len() == self.dim()
    }

    /// Vectors annihilated (under the standard pairing) by every basis vector.
    fn annihilator(&self) -> Vec<Vec<F>> {
        let n = self.ambient_dim;
        if self.basis.is_empty() {
            return Matrix::<F>::identity(n, self.ctx.clone()).rows();
        }
        let mut rows = self.basis.clone();
        let pivots = rref(&mut rows, n);
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut v = vec![F::zero(&self.ctx); n];
                v[f] = F::one(&self.ctx);
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = rows[i][f].negated();
                }
                v
            })
            .collect()
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension");
        let ann = other.annihilator();
        if ann.is_empty() {
            return self.clone();
        }
        let k = self.basis.len();
        if k == 0 {
            return self.clone();
        }
        // Coefficients c with sum_i c_i u_i annihilated by every a in ann.
        let dot = |a: &[F], b: &[F]| {
            a.iter()
                .zip(b)
                .fold(F::zero(&self.ctx), |acc, (x, y)| acc.plus(&x.times(y)))
        };
        let mut system: Vec<Vec<F>> = ann
            .iter()
            .map(|a| self.basis.iter().map(|u| dot(a, u)).collect())
            .collect();
        let pivots = rref(&mut system, k);
        let vectors = (0..k)
            .filter(|c| !pivots.contains(c))
            .map(|f| {
                let mut coeffs = vec![F::zero(&self.ctx); k];
                coeffs[f] = F::one(&self.ctx);
                for (i, &p) in pivots.iter().enumerate() {
                    coeffs[p] = system[i][f].negated();
                }
                let mut v = vec![F::zero(&self.ctx); self.ambient_dim];
                for (c, u) in coeffs.iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(u) {
                        *x = x.plus(&c.times(y));
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.ambient_dim, vectors, self.ctx.clone())
    }

    /// `M·S ⊆ S`.
    pub fn is_invariant_under(&self, m: &Matrix<F>) -> bool {
        self.basis
            .iter()
            .all(|v| m.apply(v).map(|w| self.contains(&w)).unwrap_or(false))
    }
}

impl<F: Scalar> Serialize for Subspace<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let basis: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(|x| x.to_string()).collect())
            .collect();
        let mut st = serializer.serialize_struct("Subspace", 2)?;
        st.serialize_field("ambient_dim", &self.ambient_dim)?;
        st.serialize_field("basis", &basis)?;
        st.end()
    }
}
