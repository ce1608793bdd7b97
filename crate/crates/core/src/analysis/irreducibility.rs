use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::invariant::{common_fixed_space, common_invariant_line};
use super::sampling::random_bindings;
use crate::catalog::{family, FamilyId, RepInstance};
use crate::error::{Error, Result};
use crate::linalg::{algebra_closure_dim, Subspace};
use crate::scalar::{ParamBinding, ParamName, RatFunc, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Irreducible,
    Reducible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "irreducible",
            Verdict::Reducible => "reducible",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    InvariantLine,
    AlgebraClosure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityVerdict {
    pub method: Method,
    pub verdict: Verdict,
    pub witness: Option<Subspace<Rational>>,
    pub closure_dim: Option<usize>,
    pub ambient_dim: usize,
    pub binding: ParamBinding,
}

/// How a `±` in a stated inequality is quantified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PmReading {
    /// Every combination of the signs must give an inequality.
    AllCombinations,
    /// Only equal signs on both sides are compared.
    MatchedSigns,
}

impl PmReading {
    pub const ALL: [PmReading; 2] = [PmReading::AllCombinations, PmReading::MatchedSigns];
}

fn value(b: &ParamBinding, name: &str) -> Result<Rational> {
    let p = ParamName::new(name)?;
    b.get(p).cloned().ok_or_else(|| Error::MissingParameter(name.into()))
}

/// Whether the stated conditions predict an irreducible representation.
pub fn paper_condition(id: FamilyId, b: &ParamBinding, reading: PmReading) -> Result<bool> {
    let one = Rational::one();
    let two = Rational::integer(2);
    let signs = [one.clone(), -one.clone()];
    // lhs(s1) != rhs(s2) over the quantified sign pairs
    let check = |lhs: &dyn Fn(&Rational) -> Rational, rhs: &dyn Fn(&Rational) -> Rational| {
        signs.iter().all(|s1| {
            signs.iter().all(|s2| {
                let compared = reading == PmReading::AllCombinations || s1 == s2;
                !compared || lhs(s1) != rhs(s2)
            })
        })
    };
    Ok(match id {
        FamilyId::Lambda(1) => {
            let (bb, d, y, t) = (value(b, "b")?, value(b, "d")?, value(b, "y")?, value(b, "t")?);
            check(&|s| &bb * &(&t + s), &|s| &y * &(&d + s))
        }
        FamilyId::Lambda(2) => {
            let (y, c, t) = (value(b, "y")?, value(b, "c")?, value(b, "t")?);
            let yc = &y * &c;
            signs.iter().all(|s| yc != &two * &(&t + s))
        }
        FamilyId::Lambda(3) => {
            let (y, t) = (value(b, "y")?, value(b, "t")?);
            signs.iter().all(|s| y != &t + s)
        }
        FamilyId::Lambda(4) => {
            let (bb, z, d) = (value(b, "b")?, value(b, "z")?, value(b, "d")?);
            let bz = &bb * &z;
            signs.iter().all(|s| bz != &two * &(&d + s))
        }
        FamilyId::Lambda(5) => {
            let (bb, d) = (value(b, "b")?, value(b, "d")?);
            signs.iter().all(|s| bb != &d + s)
        }
        FamilyId::Lambda(6..=12) => false,
        other => return Err(Error::UnknownFamily(format!("no stated irreducibility condition for {}", other.tag()))),
    })
}

/// Part of parameter space where the stated condition is meant to apply:
/// the eigenvector formulas for λ₂ and λ₄ divide by `c` and `z`.
pub fn sweep_region(id: FamilyId) -> impl Fn(&ParamBinding) -> bool {
    let guard = match id {
        FamilyId::Lambda(2) => Some("c"),
        FamilyId::Lambda(4) => Some("z"),
        _ => None,
    };
    move |b: &ParamBinding| match guard {
        Some(name) => value(b, name).map(|v| !v.is_zero()).unwrap_or(false),
        None => true,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub binding: ParamBinding,
    pub paper: Verdict,
    pub oracle: Verdict,
    pub witness: Option<Subspace<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub family: FamilyId,
    pub reading: PmReading,
    pub sample_count: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    /// Samples where the stated condition predicts irreducibility.
    pub paper_irreducible: usize,
    /// Samples where the invariant-line and closure oracles agree.
    pub oracle_cross_agreements: usize,
    pub oracle_cross_mismatches: Vec<ParamBinding>,
    pub notes: Vec<String>,
}

impl ComparisonReport {
    pub fn is_conserved(&self) -> bool {
        self.agreements + self.disagreements.len() == self.sample_count
    }

    /// Every sample the stated condition calls irreducible is in fact reducible.
    pub fn systematic(&self) -> bool {
        self.paper_irreducible > 0 && self.disagreements.len() == self.paper_irreducible
    }
}

/// Samples random bindings of a λ family and compares the stated condition
/// against the invariant-line oracle (exact in dimension 2), cross-checking
/// that oracle against the algebra closure.
pub fn compare_irreducibility(id: FamilyId, samples: usize, seed: u64, reading: PmReading) -> Result<ComparisonReport> {
    if !matches!(id, FamilyId::Lambda(1..=12)) {
        return Err(Error::UnknownFamily(format!("{} is not a λ family", id.tag())));
    }
    let sym = family(id, 2)?;
    let bindings = random_bindings(id, 2, samples, seed, sweep_region(id))?;
    let rows = bindings
        .par_iter()
        .map(|b| -> Result<_> {
            let rep = sym.specialize(b)?;
            let line = common_invariant_line(&rep)?;
            let closure = algebra_closure_dim(&rep.generator_images())?;
            let paper = if paper_condition(id, b, reading)? {
                Verdict::Irreducible
            } else {
                Verdict::Reducible
            };
            Ok((b.clone(), paper, line, closure))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = ComparisonReport {
        family: id,
        reading,
        sample_count: rows.len(),
        agreements: 0,
        disagreements: vec![],
        paper_irreducible: 0,
        oracle_cross_agreements: 0,
        oracle_cross_mismatches: vec![],
        notes: vec![],
    };
    for (binding, paper, line, closure) in rows {
        let oracle = if line.is_some() {
            Verdict::Reducible
        } else {
            Verdict::Irreducible
        };
        if (closure < 4) == line.is_some() {
            report.oracle_cross_agreements += 1;
        } else {
            report.oracle_cross_mismatches.push(binding.clone());
        }
        if paper == Verdict::Irreducible {
            report.paper_irreducible += 1;
        }
        if paper == oracle {
            report.agreements += 1;
        } else {
            report.disagreements.push(Disagreement {
                binding,
                paper,
                oracle,
                witness: line,
            });
        }
    }
    if report.systematic() {
        report.notes.push(
            "every binding the stated condition calls irreducible has a common invariant line: one generator maps to I, so every eigenline of the other is invariant"
                .into(),
        );
    }
    if matches!(id, FamilyId::Lambda(1)) && reading == PmReading::MatchedSigns && !report.disagreements.is_empty() {
        report.notes.push("matched-sign reading misses the mixed-sign coincidences of eigenlines".into());
    }
    Ok(report)
}

/// Algebra-closure verdict for a symbolic representation at each binding.
/// Reducible verdicts carry a common fixed vector space or invariant line
/// when one exists.
pub fn burnside_verdict(rep: &RepInstance<RatFunc>, bindings: &[ParamBinding]) -> Result<Vec<IrreducibilityVerdict>> {
    bindings
        .par_iter()
        .map(|b| {
            let spec = rep.specialize(b)?;
            let m = spec.dim;
            let closure = algebra_closure_dim(&spec.generator_images())?;
            let verdict = if closure == m * m {
                Verdict::Irreducible
            } else {
                Verdict::Reducible
            };
            let witness = if verdict == Verdict::Reducible {
                let fixed = common_fixed_space(&spec);
                if fixed.is_zero() {
                    common_invariant_line(&spec).ok().flatten()
                } else {
                    Some(fixed)
                }
            } else {
                None
            };
            Ok(IrreducibilityVerdict {
                method: Method::AlgebraClosure,
                verdict,
                witness,
                closure_dim: Some(closure),
                ambient_dim: m,
                binding: b.clone(),
            })
        })
        .collect()
}

/// What is asserted in print about irreducibility of a family at `n`, if anything.
pub fn paper_claim(id: FamilyId, n: usize) -> Option<Verdict> {
    match id {
        FamilyId::Gamma(1) if n >= 6 => Some(Verdict::Reducible),
        FamilyId::Gamma(2) if n >= 3 => Some(Verdict::Reducible),
        FamilyId::Delta(_) if n >= 10 => Some(Verdict::Reducible),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurnsideSummary {
    pub family: FamilyId,
    pub n: usize,
    pub ambient_dim: usize,
    pub samples: usize,
    pub closure_dims: BTreeSet<usize>,
    /// The common verdict, or `None` when bindings split.
    pub unanimous: Option<Verdict>,
    pub paper_claim: Option<Verdict>,
    pub verdicts: Vec<IrreducibilityVerdict>,
}

impl BurnsideSummary {
    /// `None` when nothing is asserted or the verdicts split.
    pub fn agrees_with_paper(&self) -> Option<bool> {
        Some(self.unanimous? == self.paper_claim?)
    }
}

pub fn burnside_sweep(id: FamilyId, n: usize, samples: usize, seed: u64) -> Result<BurnsideSummary> {
    let rep = family(id, n)?;
    let bindings = random_bindings(id, n, samples, seed, |_| true)?;
    let verdicts = burnside_verdict(&rep, &bindings)?;
    let kinds: BTreeSet<Verdict> = verdicts.iter().map(|v| v.verdict).collect();
    Ok(BurnsideSummary {
        family: id,
        n,
        ambient_dim: rep.dim,
        samples: verdicts.len(),
        closure_dims: verdicts.iter().filter_map(|v| v.closure_dim).collect(),
        unanimous: if kinds.len() == 1 { kinds.into_iter().next() } else { None },
        paper_claim: paper_claim(id, n),
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bind(s: &str) -> ParamBinding {
        ParamBinding::parse(s).unwrap()
    }

    #[test]
    fn stated_conditions() {
        let all = PmReading::AllCombinations;
        assert!(!paper_condition(FamilyId::Lambda(1), &bind("b=1,y=1,d=3,t=3"), all).unwrap());
        assert!(paper_condition(FamilyId::Lambda(2), &bind("c=2,y=1,t=5"), all).unwrap());
        assert!(paper_condition(FamilyId::Lambda(5), &bind("b=3,d=1"), all).unwrap());
        // b(t+1) = y(d-1) only: a mixed-sign coincidence
        let mixed = bind("b=1,y=1,d=2,t=0");
        assert!(!paper_condition(FamilyId::Lambda(1), &mixed, all).unwrap());
        assert!(paper_condition(FamilyId::Lambda(1), &mixed, PmReading::MatchedSigns).unwrap());
    }

    #[test]
    fn small_sweeps() {
        let r = compare_irreducibility(FamilyId::Lambda(1), 100, 3, PmReading::AllCombinations).unwrap();
        assert!(r.is_conserved());
        assert!(r.disagreements.is_empty());
        assert_eq!(r.oracle_cross_agreements, 100);
        let r = compare_irreducibility(FamilyId::Lambda(3), 50, 3, PmReading::AllCombinations).unwrap();
        assert!(r.systematic());
        let r = compare_irreducibility(FamilyId::Lambda(9), 20, 3, PmReading::AllCombinations).unwrap();
        assert!(r.disagreements.is_empty());
    }

    #[test]
    fn gamma1_closure() {
        for n in 3..=5 {
            let s = burnside_sweep(FamilyId::Gamma(1), n, 3, 1).unwrap();
            assert_eq!(s.closure_dims.iter().copied().collect::<Vec<_>>(), [1 + (n - 1) * (n - 1)]);
            assert_eq!(s.unanimous, Some(Verdict::Reducible));
            assert!(s.verdicts.iter().all(|v| v.witness.is_some()));
        }
    }
}
