use crate::catalog::RepInstance;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Rational, Scalar};

/// Vectors fixed by every generator image.
pub fn common_fixed_space<F: Scalar>(rep: &RepInstance<F>) -> Subspace<F> {
    let ctx = rep.ctx();
    rep.generator_images()
        .iter()
        .fold(Subspace::full(rep.dim, ctx.clone()), |acc, m| {
            acc.intersect(&m.eigenspace(&F::one(&ctx)))
        })
}

/// A line invariant under every generator image, if one exists.
///
/// Images must be involutions, so every invariant line lies in the `+1` or
/// the `-1` eigenspace of each image; the search intersects one choice per
/// image, pruning as soon as the intersection vanishes. An image equal to
/// `±I` contributes the whole space on one side and nothing on the other.
pub fn common_invariant_line(rep: &RepInstance<Rational>) -> Result<Option<Subspace<Rational>>> {
    let mut sides: Vec<[Subspace<Rational>; 2]> = Vec::new();
    for m in dedup(rep.generator_images()) {
        if !m.is_involution() {
            return Err(Error::NotInvolution);
        }
        sides.push([m.eigenspace(&Rational::one()), m.eigenspace(&Rational::integer(-1))]);
    }
    let found = search(Subspace::full(rep.dim, ()), &sides);
    if let Some(line) = &found {
        debug_assert!(rep.generator_images().iter().all(|m| line.is_invariant_under(m)));
    }
    Ok(found)
}

fn dedup<F: Scalar>(ms: Vec<Matrix<F>>) -> Vec<Matrix<F>> {
    let mut out: Vec<Matrix<F>> = Vec::new();
    for m in ms {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn search(current: Subspace<Rational>, rest: &[[Subspace<Rational>; 2]]) -> Option<Subspace<Rational>> {
    if current.is_zero() {
        return None;
    }
    match rest.split_first() {
        None => Some(Subspace::line(current.basis()[0].clone(), ())),
        Some((pair, tail)) => pair.iter().find_map(|side| search(current.intersect(side), tail)),
    }
}
