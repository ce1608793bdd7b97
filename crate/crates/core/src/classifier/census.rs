//! Exhaustive finite-field censuses probing whether the parametric family
//! lists are complete.
//!
//! Membership is up to the sign of each block and nothing else. A census
//! mismatch is a finding, not an error: an `F_p` solution need not lift to
//! characteristic zero, so every unmatched survivor carries the outcome of a
//! naive rational lift attempt.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::templates::{match_first, Template};
use crate::braid::{fvb_presentation, GenKind, Generator, Relation};
use crate::catalog::{errata_candidates, FamilyId};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{fp_enumerate, is_prime, FpElem, Rational, Scalar, ENUMERATION_GUARD};

/// Height bound of the rational lift search.
pub const LIFT_HEIGHT: i64 = 2;
/// Per-block cap on lift candidates.
pub const LIFT_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LiftStatus {
    /// A rational point reducing to the survivor satisfies the relations
    /// and lies in a family after all.
    LiftMatches { template: String, blocks: Vec<Matrix<Rational>> },
    /// A rational point reducing to the survivor satisfies the relations
    /// and is outside every family: a genuine counterexample.
    Counterexample { blocks: Vec<Matrix<Rational>> },
    /// Nothing of height at most `height` lifts.
    NoLift { height: i64 },
    /// The search space exceeded [`LIFT_CAP`].
    Capped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unmatched {
    pub blocks: Vec<Matrix<FpElem>>,
    pub lift: LiftStatus,
    /// The amended family (see [`errata_candidates`]) this survivor fits, if any.
    pub amended: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub prime: u64,
    pub shape: String,
    pub block_size: usize,
    pub n_probe: Option<usize>,
    /// Matrices enumerated per block (`p^(k²)`).
    pub total_candidates: u128,
    /// Size of the unfiltered search space (`p^(k²)` per block, multiplied).
    pub search_space: u128,
    pub involutions: usize,
    /// Blocks surviving the single-generator relations, as (σ, ρ).
    pub prefiltered: (usize, usize),
    pub pairs_checked: u128,
    pub solutions: usize,
    pub matched: BTreeMap<String, usize>,
    pub unmatched: Vec<Unmatched>,
    pub notes: Vec<String>,
}

impl CensusReport {
    pub fn matched_total(&self) -> usize {
        self.matched.values().sum()
    }

    pub fn is_conserved(&self) -> bool {
        self.matched_total() + self.unmatched.len() == self.solutions
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Unmatched> {
        self.unmatched
            .iter()
            .filter(|u| matches!(u.lift, LiftStatus::Counterexample { .. }))
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn all_matrices(p: u64, k: usize) -> Result<Vec<Matrix<FpElem>>> {
    Ok(fp_enumerate(p, k * k)?
        .map(|t| Matrix::from_fn(k, p, |r, c| t[r * k + c]))
        .collect())
}

fn images<F: Scalar>(
    n: usize,
    sigma: Option<&Matrix<F>>,
    rho: Option<&Matrix<F>>,
) -> BTreeMap<Generator, Matrix<F>> {
    let k = sigma.or(rho).map_or(0, |m| m.dim());
    let dim = n + k - 2;
    let mut out = BTreeMap::new();
    for i in 1..n {
        if let Some(s) = sigma {
            out.insert(Generator::sigma(i), Matrix::embed(dim, i - 1, s).expect("fits"));
        }
        if let Some(r) = rho {
            out.insert(Generator::rho(i), Matrix::embed(dim, i - 1, r).expect("fits"));
        }
    }
    out
}

fn holds<F: Scalar>(imgs: &BTreeMap<Generator, Matrix<F>>, rel: &Relation) -> bool {
    let eval = |letters: &[Generator]| {
        let first = imgs.values().next().expect("nonempty");
        letters
            .iter()
            .fold(Matrix::identity(first.dim(), first.ctx().clone()), |acc, g| {
                acc.mul_unchecked(&imgs[g])
            })
    };
    eval(rel.lhs.letters()) == eval(rel.rhs.letters())
}

/// Relations of FVB_n split by which generator kinds they involve.
struct Split {
    n: usize,
    sigma: Vec<Relation>,
    rho: Vec<Relation>,
    mixed: Vec<Relation>,
}

impl Split {
    fn new(n: usize) -> Result<Split> {
        let mut s = Split {
            n,
            sigma: vec![],
            rho: vec![],
            mixed: vec![],
        };
        for r in fvb_presentation(n)?.relations {
            let kinds: Vec<GenKind> = r.lhs.letters().iter().chain(r.rhs.letters()).map(|g| g.kind).collect();
            if kinds.iter().all(|k| *k == GenKind::Sigma) {
                s.sigma.push(r);
            } else if kinds.iter().all(|k| *k == GenKind::Rho) {
                s.rho.push(r);
            } else {
                s.mixed.push(r);
            }
        }
        Ok(s)
    }

    fn sigma_ok<F: Scalar>(&self, m: &Matrix<F>) -> bool {
        let imgs = images(self.n, Some(m), None);
        self.sigma.iter().all(|r| holds(&imgs, r))
    }

    fn rho_ok<F: Scalar>(&self, m: &Matrix<F>) -> bool {
        let imgs = images(self.n, None, Some(m));
        self.rho.iter().all(|r| holds(&imgs, r))
    }

    fn pair_ok<F: Scalar>(&self, s: &Matrix<F>, r: &Matrix<F>) -> bool {
        let imgs = images(self.n, Some(s), Some(r));
        self.mixed.iter().all(|rel| holds(&imgs, rel))
    }
}

/// Rationals of height at most `h` reducing to `target` mod p, smallest first.
fn lifts_of(target: FpElem, h: i64) -> Vec<Rational> {
    let p = target.modulus();
    let mut out: Vec<Rational> = Vec::new();
    for den in 1..=h {
        for num in -h..=h {
            let q = Rational::new(num, den).expect("den > 0");
            if q.height() > h.into() || out.contains(&q) {
                continue;
            }
            if FpElem::from_rational(&q, &p) == Some(target) {
                out.push(q);
            }
        }
    }
    let sym = Rational::integer(target.symmetric());
    out.retain(|q| *q != sym);
    out.insert(0, sym);
    out
}

/// All rational blocks whose entries are drawn from the lift lists.
fn block_lifts(m: &Matrix<FpElem>, h: i64) -> Option<Vec<Matrix<Rational>>> {
    let choices: Vec<Vec<Rational>> = m.entries().iter().map(|e| lifts_of(*e, h)).collect();
    let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()))?;
    if total > LIFT_CAP {
        return None;
    }
    let k = m.dim();
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; choices.len()];
    loop {
        out.push(Matrix::from_fn(k, (), |r, c| choices[r * k + c][idx[r * k + c]].clone()));
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Some(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn lift_pair(split: &Split, s: &Matrix<FpElem>, r: &Matrix<FpElem>, templates: &[Template]) -> LiftStatus {
    let (Some(ss), Some(rs)) = (block_lifts(s, LIFT_HEIGHT), block_lifts(r, LIFT_HEIGHT)) else {
        return LiftStatus::Capped;
    };
    let ss: Vec<_> = ss.into_iter().filter(|m| m.is_involution() && split.sigma_ok(m)).collect();
    let rs: Vec<_> = rs.into_iter().filter(|m| m.is_involution() && split.rho_ok(m)).collect();
    for a in &ss {
        for b in &rs {
            if split.pair_ok(a, b) {
                let blocks = vec![a.clone(), b.clone()];
                return match match_first(templates, &blocks, true) {
                    Some(t) => LiftStatus::LiftMatches {
                        template: t.template,
                        blocks,
                    },
                    None => LiftStatus::Counterexample { blocks },
                };
            }
        }
    }
    LiftStatus::NoLift { height: LIFT_HEIGHT }
}

fn lift_involution(m: &Matrix<FpElem>, templates: &[Template]) -> LiftStatus {
    let Some(cands) = block_lifts(m, LIFT_HEIGHT) else {
        return LiftStatus::Capped;
    };
    match cands.into_iter().find(|c| c.is_involution()) {
        Some(c) => match match_first(templates, std::slice::from_ref(&c), true) {
            Some(t) => LiftStatus::LiftMatches {
                template: t.template,
                blocks: vec![c],
            },
            None => LiftStatus::Counterexample { blocks: vec![c] },
        },
        None => LiftStatus::NoLift { height: LIFT_HEIGHT },
    }
}

/// All 2×2 involutions over `F_p`, sorted into the three involution shapes.
pub fn census_involutions_2x2(p: u64) -> Result<CensusReport> {
    check_prime(p)?;
    let forms = Template::involution_forms();
    let all = all_matrices(p, 2)?;
    let total = all.len() as u128;
    let sols: Vec<Matrix<FpElem>> = all.into_par_iter().filter(|m| m.is_involution()).collect();
    let hits: Vec<Option<String>> = sols
        .par_iter()
        .map(|m| match_first(&forms, std::slice::from_ref(m), true).map(|t| t.template))
        .collect();
    let mut matched: BTreeMap<String, usize> = forms.iter().map(|f| (f.name.clone(), 0)).collect();
    let mut unmatched = Vec::new();
    for (m, hit) in sols.iter().zip(hits) {
        match hit {
            Some(name) => *matched.entry(name).or_default() += 1,
            None => unmatched.push(Unmatched {
                blocks: vec![m.clone()],
                lift: lift_involution(m, &forms),
                amended: None,
            }),
        }
    }
    let mut notes = vec!["membership up to sign; first matching form is credited".to_string()];
    if p == 2 {
        notes.push("characteristic 2: I and -I coincide, so the sign freedom is vacuous".into());
    }
    Ok(CensusReport {
        prime: p,
        shape: "2x2 involutions".into(),
        block_size: 2,
        n_probe: None,
        total_candidates: total,
        search_space: total,
        involutions: sols.len(),
        prefiltered: (sols.len(), 0),
        pairs_checked: 0,
        solutions: sols.len(),
        matched,
        unmatched,
        notes,
    })
}

/// The families a census of `block_size` blocks compares against.
pub fn census_templates(block_size: usize) -> Result<Vec<Template>> {
    let mut out = vec![Template::trivial(block_size)];
    let ids = match block_size {
        2 => FamilyId::gammas(),
        3 => FamilyId::deltas(),
        _ => return Err(Error::DimensionMismatch(block_size, 2)),
    };
    for id in ids {
        out.push(Template::family(id)?);
    }
    Ok(out)
}

fn amended_templates(block_size: usize) -> Result<Vec<Template>> {
    Ok(errata_candidates()?
        .into_iter()
        .filter(|e| e.spec.block_size() == block_size)
        .map(|e| {
            let mut blocks = vec![e.spec.sigma];
            blocks.extend(e.spec.rho);
            Template::new(&format!("{}*", e.family.tag()), blocks, e.spec.constraints)
        })
        .collect())
}

/// All pairs `(σ-block, ρ-block)` over `F_p` whose local homogeneous
/// assembly on `n_probe` strands satisfies every FVB relation, compared
/// against the trivial representation and the families of that block size.
pub fn census_fvb_local(p: u64, block_size: usize, n_probe: usize) -> Result<CensusReport> {
    check_prime(p)?;
    let templates = census_templates(block_size)?;
    if n_probe < 3 {
        return Err(Error::InvalidStrandCount {
            n: n_probe,
            reason: "a census needs at least three strands to see every relation type".into(),
        });
    }
    let k2 = (block_size * block_size) as u32;
    let per_block = (p as u128).pow(k2);
    let space = per_block.saturating_mul(per_block);
    let split = Split::new(n_probe)?;

    let involutions: Vec<Matrix<FpElem>> = all_matrices(p, block_size)?
        .into_par_iter()
        .filter(|m| m.is_involution())
        .collect();
    let sigmas: Vec<&Matrix<FpElem>> = involutions.par_iter().filter(|m| split.sigma_ok(*m)).collect();
    let rhos: Vec<&Matrix<FpElem>> = involutions.par_iter().filter(|m| split.rho_ok(*m)).collect();
    let pairs = (sigmas.len() as u128) * (rhos.len() as u128);
    if pairs > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded(pairs, ENUMERATION_GUARD));
    }

    let survivors: Vec<(Matrix<FpElem>, Matrix<FpElem>)> = sigmas
        .par_iter()
        .flat_map_iter(|s| {
            rhos.iter()
                .filter(|r| split.pair_ok(*s, **r))
                .map(|r| ((*s).clone(), (*r).clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let hits: Vec<Option<String>> = survivors
        .par_iter()
        .map(|(s, r)| match_first(&templates, &[s.clone(), r.clone()], true).map(|t| t.template))
        .collect();

    let mut matched: BTreeMap<String, usize> = templates.iter().map(|t| (t.name.clone(), 0)).collect();
    let mut unmatched = Vec::new();
    for ((s, r), hit) in survivors.iter().zip(hits) {
        match hit {
            Some(name) => *matched.entry(name).or_default() += 1,
            None => unmatched.push(Unmatched {
                blocks: vec![s.clone(), r.clone()],
                lift: LiftStatus::Capped,
                amended: None,
            }),
        }
    }
    let amended = amended_templates(block_size)?;
    unmatched.par_iter_mut().for_each(|u| {
        u.lift = lift_pair(&split, &u.blocks[0], &u.blocks[1], &templates);
        u.amended = match_first(&amended, &u.blocks, true).map(|t| t.template);
    });

    let mut notes = vec![
        "membership up to the sign of each block; first matching family is credited".to_string(),
        format!("lift search: rationals of height <= {LIFT_HEIGHT}, at most {LIFT_CAP} candidates per block"),
    ];
    if p == 2 {
        notes.push("characteristic 2: sign freedom is vacuous and no classification is asserted".into());
    }
    Ok(CensusReport {
        prime: p,
        shape: format!("FVB local homogeneous, {block_size}x{block_size} blocks"),
        block_size,
        n_probe: Some(n_probe),
        total_candidates: per_block,
        search_space: space,
        involutions: involutions.len(),
        prefiltered: (sigmas.len(), rhos.len()),
        pairs_checked: pairs,
        solutions: survivors.len(),
        matched,
        unmatched,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involutions_mod_3() {
        let r = census_involutions_2x2(3).unwrap();
        assert_eq!(r.total_candidates, 81);
        assert_eq!(r.solutions, 14);
        assert!(r.unmatched.is_empty());
        assert!(r.is_conserved());
    }

    #[test]
    fn involutions_mod_2_note() {
        let r = census_involutions_2x2(2).unwrap();
        assert!(r.is_conserved());
        assert!(r.notes.iter().any(|n| n.contains("coincide")));
    }

    #[test]
    fn lifts_reduce_correctly() {
        let t = FpElem::new(2, 3).unwrap();
        let ls = lifts_of(t, 2);
        assert_eq!(ls[0], Rational::integer(-1));
        assert!(ls.iter().all(|q| FpElem::from_rational(q, &3) == Some(t)));
        assert!(ls.contains(&Rational::new(1, 2).unwrap()));
    }

    #[test]
    fn block_two_survivors_are_stable() {
        let r = census_fvb_local(3, 2, 4).unwrap();
        assert!(r.is_conserved());
        assert!(r.unmatched.is_empty());
        let bigger = Split::new(5).unwrap();
        assert_eq!(r.search_space, 3u128.pow(8));
        let again = census_fvb_local(3, 2, 5).unwrap();
        assert_eq!(again.solutions, r.solutions);
        for (s, rho) in census_pairs(3, 2, 4).unwrap() {
            assert!(bigger.sigma_ok(&s) && bigger.rho_ok(&rho) && bigger.pair_ok(&s, &rho));
        }
    }

    fn census_pairs(p: u64, k: usize, n: usize) -> Result<Vec<(Matrix<FpElem>, Matrix<FpElem>)>> {
        let split = Split::new(n)?;
        let inv: Vec<_> = all_matrices(p, k)?.into_iter().filter(|m| m.is_involution()).collect();
        let mut out = vec![];
        for s in inv.iter().filter(|m| split.sigma_ok(*m)) {
            for r in inv.iter().filter(|m| split.rho_ok(*m)) {
                if split.pair_ok(s, r) {
                    out.push((s.clone(), r.clone()));
                }
            }
        }
        Ok(out)
    }

    #[test]
    fn block_three_unmatched_fit_amendments() {
        let r = census_fvb_local(2, 3, 5).unwrap();
        assert!(r.is_conserved());
        assert!(r.unmatched.iter().all(|u| u.amended.is_some()));
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(census_involutions_2x2(4), Err(Error::NotPrime(4)));
    }
}
