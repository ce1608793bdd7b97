use std::collections::BTreeMap;

use super::family::{BlockSpec, FamilyId};
use crate::braid::{GenKind, Generator, GroupKind, Presentation, Word};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{FpElem, ParamBinding, ParamName, RatFunc, Rational, Scalar};

/// Generator images of a (homogeneous local) representation over `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepInstance<F: Scalar> {
    pub family: FamilyId,
    pub presentation: Presentation,
    pub dim: usize,
    pub images: BTreeMap<Generator, Matrix<F>>,
    /// The specialization this instance was obtained from, if any.
    pub binding: Option<ParamBinding>,
    /// Symbolic non-vanishing conditions (empty after specialization).
    pub constraints: Vec<RatFunc>,
}

/// Places `sigma` / `rho` blocks on the diagonal at every position:
/// generator `i` gets `I_{i-1} ⊕ block ⊕ I`.
pub fn local_images<F: Scalar>(
    n: usize,
    dim: usize,
    sigma: &Matrix<F>,
    rho: Option<&Matrix<F>>,
) -> Result<BTreeMap<Generator, Matrix<F>>> {
    let k = sigma.dim();
    if dim + 2 != n + k {
        return Err(Error::DimensionMismatch(dim, n + k - 2));
    }
    let mut images = BTreeMap::new();
    for i in 1..n {
        images.insert(Generator::sigma(i), Matrix::embed(dim, i - 1, sigma)?);
        if let Some(r) = rho {
            images.insert(Generator::rho(i), Matrix::embed(dim, i - 1, r)?);
        }
    }
    Ok(images)
}

pub fn assemble_local(n: usize, spec: &BlockSpec) -> Result<RepInstance<RatFunc>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount {
            n,
            reason: "at least two strands are required".into(),
        });
    }
    let kind = if spec.rho.is_some() {
        GroupKind::FlatVirtual
    } else {
        GroupKind::Braid
    };
    let dim = n + spec.block_size() - 2;
    Ok(RepInstance {
        family: spec.family,
        presentation: Presentation::new(kind, n)?,
        dim,
        images: local_images(n, dim, &spec.sigma, spec.rho.as_ref())?,
        binding: None,
        constraints: spec.constraints.clone(),
    })
}

/// The symbolic representation of a built-in family on `n` strands.
pub fn family(id: FamilyId, n: usize) -> Result<RepInstance<RatFunc>> {
    id.check_n(n)?;
    assemble_local(n, &id.spec()?)
}

impl<F: Scalar> RepInstance<F> {
    pub fn n(&self) -> usize {
        self.presentation.n
    }

    pub fn ctx(&self) -> F::Ctx {
        self.images
            .values()
            .next()
            .expect("at least one generator")
            .ctx()
            .clone()
    }

    pub fn image(&self, g: Generator) -> Result<&Matrix<F>> {
        self.images
            .get(&g)
            .ok_or_else(|| Error::AlphabetMismatch(format!("no image for {g}")))
    }

    pub fn generator_images(&self) -> Vec<Matrix<F>> {
        self.images.values().cloned().collect()
    }

    /// Image of a word: product of letter images in order, `I` for the
    /// empty word.
    pub fn eval_word(&self, w: &Word) -> Result<Matrix<F>> {
        let mut acc = Matrix::identity(self.dim, self.ctx());
        for &g in w.letters() {
            acc = acc.mul_unchecked(self.image(g)?);
        }
        Ok(acc)
    }

    /// The block sitting at the generator's position.
    pub fn local_block(&self, g: Generator, block_size: usize) -> Result<Matrix<F>> {
        Ok(self.image(g)?.block(g.index - 1, block_size))
    }

    /// Every image is `I ⊕ B ⊕ I` with the same `B` for all positions of a
    /// given generator kind.
    pub fn is_homogeneous(&self) -> bool {
        let k = self.dim + 2 - self.n();
        for kind in [GenKind::Sigma, GenKind::Rho] {
            let mut first: Option<Matrix<F>> = None;
            for (g, m) in self.images.iter().filter(|(g, _)| g.kind == kind) {
                let b = m.block(g.index - 1, k);
                let Ok(rebuilt) = Matrix::embed(self.dim, g.index - 1, &b) else {
                    return false;
                };
                if &rebuilt != m {
                    return false;
                }
                match &first {
                    None => first = Some(b),
                    Some(f) if *f != b => return false,
                    _ => {}
                }
            }
        }
        true
    }

    pub fn map_images<G: Scalar>(
        &self,
        ctx: G::Ctx,
        f: &dyn Fn(&F) -> Result<G>,
    ) -> Result<RepInstance<G>> {
        let images = self
            .images
            .iter()
            .map(|(g, m)| Ok((*g, m.map(ctx.clone(), f)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(RepInstance {
            family: self.family,
            presentation: self.presentation.clone(),
            dim: self.dim,
            images,
            binding: self.binding.clone(),
            constraints: Vec::new(),
        })
    }
}

impl RepInstance<RatFunc> {
    pub fn params(&self) -> Vec<ParamName> {
        let mut set = std::collections::BTreeSet::new();
        for m in self.images.values() {
            for e in m.entries() {
                set.extend(e.vars());
            }
        }
        for c in &self.constraints {
            set.extend(c.vars());
        }
        set.into_iter().collect()
    }

    /// Checks the family's non-vanishing conditions at `binding`.
    pub fn check_constraints(&self, binding: &ParamBinding) -> Result<()> {
        for c in &self.constraints {
            if c.specialize(binding)?.is_zero() {
                return Err(Error::ConstraintViolated(c.to_string()));
            }
        }
        Ok(())
    }

    pub fn specialize(&self, binding: &ParamBinding) -> Result<RepInstance<Rational>> {
        self.check_constraints(binding)?;
        let mut rep = self.map_images::<Rational>((), &|e| e.specialize(binding))?;
        rep.binding = Some(binding.clone());
        Ok(rep)
    }

    /// Reduction mod `p` at an `F_p` assignment of the parameters.
    pub fn specialize_fp(&self, assign: &BTreeMap<ParamName, FpElem>, p: u64) -> Result<RepInstance<FpElem>> {
        let lookup = |q: ParamName| assign.get(&q).copied();
        for c in &self.constraints {
            if c.eval_in::<FpElem>(&lookup, &p)?.is_zero() {
                return Err(Error::ConstraintViolated(c.to_string()));
            }
        }
        self.map_images::<FpElem>(p, &|e| e.eval_in::<FpElem>(&lookup, &p))
    }

    /// Substitutes rational functions for parameters in every image.
    pub fn substitute(&self, subs: &BTreeMap<ParamName, RatFunc>) -> Result<RepInstance<RatFunc>> {
        let map = |p: ParamName| subs.get(&p).cloned();
        let mut rep = self.map_images::<RatFunc>((), &|e| e.substitute(&map))?;
        rep.constraints = self
            .constraints
            .iter()
            .map(|c| c.substitute(&map))
            .collect::<Result<Vec<_>>>()?;
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratfunc_matrix;

    #[test]
    fn burau_block_placement() {
        let rep = family(FamilyId::Burau, 3).unwrap();
        let expect = ratfunc_matrix(&[&["1-t", "t", "0"], &["1", "0", "0"], &["0", "0", "1"]]).unwrap();
        assert_eq!(rep.image(Generator::sigma(1)).unwrap(), &expect);
        assert!(rep.image(Generator::rho(1)).is_err());
    }

    #[test]
    fn delta4_rho2() {
        let rep = family(FamilyId::Delta(4), 4).unwrap();
        assert_eq!(rep.dim, 5);
        let expect = ratfunc_matrix(&[
            &["1", "0", "0", "0", "0"],
            &["0", "1", "0", "0", "0"],
            &["0", "0", "0", "x", "0"],
            &["0", "0", "1/x", "0", "0"],
            &["0", "0", "0", "0", "1"],
        ])
        .unwrap();
        assert_eq!(rep.image(Generator::rho(2)).unwrap(), &expect);
    }

    #[test]
    fn gamma_sigma_images_are_identity() {
        let rep = family(FamilyId::Gamma(1), 3).unwrap();
        for i in 1..3 {
            assert!(rep.image(Generator::sigma(i)).unwrap().is_identity());
        }
        assert!(rep.is_homogeneous());
    }

    #[test]
    fn incompatible_strand_counts() {
        assert!(family(FamilyId::Lambda(1), 3).is_err());
        assert!(family(FamilyId::Gamma(1), 1).is_err());
    }

    #[test]
    fn specialization_checks_constraints() {
        let rep = family(FamilyId::Lambda(1), 2).unwrap();
        let bad = ParamBinding::parse("b=0,d=1,y=1,t=0").unwrap();
        assert!(rep.specialize(&bad).is_err());
        let good = ParamBinding::parse("b=2,d=3,y=1,t=0").unwrap();
        let s = rep.specialize(&good).unwrap();
        assert_eq!(s.image(Generator::sigma(1)).unwrap().get(1, 0), &Rational::integer(-4));
    }
}
