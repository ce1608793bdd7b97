use rayon::prelude::*;
use serde::Serialize;

use super::family::FamilyId;
use super::rep::RepInstance;
use crate::braid::{GroupKind, Presentation, Relation};
use crate::linalg::Matrix;
use crate::scalar::{Poly, RatFunc, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The relation mentions a generator the representation has no image for.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Offending {
    pub row: usize,
    pub col: usize,
    /// `lhs - rhs` at that entry.
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub id: String,
    pub family: u8,
    pub relation: String,
    pub status: CheckStatus,
    pub offending: Option<Offending>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub family: FamilyId,
    pub n: usize,
    pub group: GroupKind,
    pub checks: Vec<RelationCheck>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0 && self.skipped == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// Whether every relation of the given relation family passed.
    pub fn family_passes(&self, family: u8) -> bool {
        self.checks
            .iter()
            .filter(|c| c.family == family)
            .all(|c| c.status == CheckStatus::Pass)
    }
}

fn check_one<F: Scalar>(rep: &RepInstance<F>, rel: &Relation) -> RelationCheck {
    let status_of = |lhs: Result<Matrix<F>, _>, rhs: Result<Matrix<F>, _>| match (lhs, rhs) {
        (Ok(l), Ok(r)) => match l.first_difference(&r) {
            None => (CheckStatus::Pass, None),
            Some((row, col, d)) => (
                CheckStatus::Fail,
                Some(Offending {
                    row,
                    col,
                    difference: d.to_string(),
                }),
            ),
        },
        _ => (CheckStatus::Skipped, None),
    };
    let (status, offending) = status_of(rep.eval_word(&rel.lhs), rep.eval_word(&rel.rhs));
    RelationCheck {
        id: rel.id(),
        family: rel.family,
        relation: rel.to_string(),
        status,
        offending,
    }
}

/// Checks the relations of `presentation` in `rep`. Over `RatFunc` a pass is
/// an exact identity of rational functions.
pub fn verify_against<F: Scalar>(rep: &RepInstance<F>, presentation: &Presentation) -> RelationReport {
    let checks: Vec<RelationCheck> = presentation
        .relations
        .par_iter()
        .map(|r| check_one(rep, r))
        .collect();
    let count = |s| checks.iter().filter(|c| c.status == s).count();
    RelationReport {
        family: rep.family,
        n: presentation.n,
        group: presentation.kind,
        passed: count(CheckStatus::Pass),
        failed: count(CheckStatus::Fail),
        skipped: count(CheckStatus::Skipped),
        checks,
    }
}

pub fn verify_relations<F: Scalar>(rep: &RepInstance<F>) -> RelationReport {
    verify_against(rep, &rep.presentation)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeterminantCheck {
    pub generator: String,
    pub determinant: String,
    /// Nonzero whenever the family's constraints hold.
    pub nonvanishing: bool,
}

/// Determinant of every image, and whether its numerator is a constant times
/// a product of constraint numerators.
pub fn determinant_checks(rep: &RepInstance<RatFunc>) -> Vec<DeterminantCheck> {
    let factors: Vec<Poly> = rep
        .constraints
        .iter()
        .filter(|c| !c.num().is_constant())
        .map(|c| c.num().clone())
        .collect();
    rep.images
        .iter()
        .map(|(g, m)| {
            let det = m.determinant();
            let mut rest = det.num().clone();
            if !rest.is_zero() {
                let mut progress = true;
                while progress && !rest.is_constant() {
                    progress = false;
                    for f in &factors {
                        if let Some(q) = rest.div_exact(f) {
                            rest = q;
                            progress = true;
                        }
                    }
                }
            }
            DeterminantCheck {
                generator: g.to_string(),
                determinant: det.to_string(),
                nonvanishing: !rest.is_zero() && rest.is_constant(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyDump {
    pub tag: FamilyId,
    pub name: String,
    pub group: GroupKind,
    pub n: usize,
    pub ambient_dim: usize,
    pub block_size: usize,
    pub sigma_block: Matrix<RatFunc>,
    pub rho_block: Option<Matrix<RatFunc>>,
    pub constraints: Vec<String>,
}

/// Catalog entry for `id` instantiated at `n` strands.
pub fn dump_family(id: FamilyId, n: usize) -> crate::Result<FamilyDump> {
    id.check_n(n)?;
    let spec = id.spec()?;
    Ok(FamilyDump {
        tag: id,
        name: id.pretty(),
        group: id.group_kind(),
        n,
        ambient_dim: id.ambient_dim(n),
        block_size: spec.block_size(),
        constraints: spec.constraints.iter().map(|c| format!("{c} != 0")).collect(),
        sigma_block: spec.sigma,
        rho_block: spec.rho,
    })
}

/// Smallest strand count at which a family is stated.
pub fn default_n(id: FamilyId) -> usize {
    match id {
        FamilyId::Lambda(_) => 2,
        FamilyId::Delta(_) => 4,
        _ => 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::fvb_presentation;
    use crate::catalog::family;

    #[test]
    fn lambda_families_are_representations() {
        for f in FamilyId::lambdas() {
            let r = verify_relations(&family(f, 2).unwrap());
            assert!(r.all_pass(), "{f}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn burau_is_not_flat() {
        let rep = family(FamilyId::Burau, 4).unwrap();
        assert!(verify_relations(&rep).all_pass());
        let r = verify_against(&rep, &fvb_presentation(4).unwrap());
        assert!(r.family_passes(1) && r.family_passes(2));
        assert!(!r.family_passes(8));
        assert!(r.skipped > 0);
    }

    #[test]
    fn determinants() {
        let rep = family(FamilyId::Beta(1), 3).unwrap();
        assert!(determinant_checks(&rep).iter().all(|d| d.nonvanishing));
        let rep = family(FamilyId::Delta(7), 4).unwrap();
        assert!(determinant_checks(&rep).iter().any(|d| !d.nonvanishing));
    }
}
