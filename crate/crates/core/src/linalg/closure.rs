//! Dimension of the unital matrix algebra generated by a set of matrices.
//!
//! Span closure: start from the identity and keep multiplying new basis
//! elements by every generator until no product leaves the span. By
//! Burnside's theorem the generators act absolutely irreducibly exactly when
//! the closure is the full `m²`-dimensional algebra.

use std::collections::VecDeque;

use super::echelon::Echelon;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn algebra_closure_dim<F: Scalar>(gens: &[Matrix<F>]) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Ok(1);
    };
    let m = first.dim();
    if let Some(g) = gens.iter().find(|g| g.dim() != m) {
        return Err(Error::DimensionMismatch(g.dim(), m));
    }
    let ctx = first.ctx().clone();
    let full = m * m;
    // Scalar generators add nothing beyond the identity.
    let mut useful: Vec<&Matrix<F>> = Vec::new();
    for g in gens {
        if g.scalar_value().is_none() && !useful.contains(&g) {
            useful.push(g);
        }
    }
    let mut basis = Echelon::new();
    let id = Matrix::identity(m, ctx);
    basis.insert(id.entries().to_vec());
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in &useful {
            let p = e.mul_unchecked(g);
            if basis.insert(p.entries().to_vec()) {
                if basis.len() == full {
                    return Ok(full);
                }
                queue.push_back(p);
            }
        }
    }
    Ok(basis.len())
}
