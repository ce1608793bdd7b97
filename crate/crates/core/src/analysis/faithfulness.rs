use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::braid::{fvb2_enumerate, GenKind, Generator, Word};
use crate::catalog::{assemble_local, errata_candidates, family, FamilyId, RepInstance};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{ParamBinding, ParamName, RatFunc, Rational, Scalar};

/// Word-length limits of [`kernel_search`].
pub const MAX_LEN_FVB2: usize = 24;
pub const MAX_LEN_FVBN: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    KernelWitness,
    NoWitnessUpToLength,
    SymbolicIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulnessFinding {
    pub family: FamilyId,
    pub n: usize,
    pub kind: FindingKind,
    pub word: Option<Word>,
    pub max_len: Option<usize>,
    pub binding: Option<ParamBinding>,
    pub words_examined: usize,
    /// The whole (finite) image group was enumerated before `max_len`.
    pub exhausted: bool,
    /// Words with identity image that could not be certified nontrivial.
    pub uncertified: usize,
}

fn transposition(perm: &mut [usize], i: usize) {
    perm.swap(i - 1, i);
}

/// Whether `w` is certainly nontrivial in FVB_n.
///
/// On two strands the group is `Z/2 * Z/2`, so every nonempty reduced word
/// is nontrivial. Otherwise `w` is certified through three quotients: the
/// abelianization mod 2 (letter parities), FVB_n → S_n sending both `σᵢ`
/// and `ρᵢ` to `(i i+1)`, and FVB_n → S_n killing every `σᵢ`.
pub fn certified_nontrivial(w: &Word, n: usize) -> bool {
    let w = w.reduced();
    if w.is_empty() {
        return false;
    }
    if n == 2 {
        return true;
    }
    let count = |k: GenKind| w.letters().iter().filter(|g| g.kind == k).count();
    if count(GenKind::Sigma) % 2 == 1 || count(GenKind::Rho) % 2 == 1 {
        return true;
    }
    let id: Vec<usize> = (0..n).collect();
    let (mut both, mut rho_only) = (id.clone(), id.clone());
    for g in w.letters() {
        transposition(&mut both, g.index);
        if g.kind == GenKind::Rho {
            transposition(&mut rho_only, g.index);
        }
    }
    both != id || rho_only != id
}

/// Shortest (then σ-first lexicographic) reduced word in the kernel of a
/// specialized representation.
///
/// On two strands every reduced word up to `max_len` is evaluated. On more
/// strands a breadth-first search over reduced words prunes any word whose
/// image was already reached, so a negative answer only covers the words
/// actually enumerated.
pub fn kernel_search(rep: &RepInstance<Rational>, max_len: usize) -> Result<FaithfulnessFinding> {
    let n = rep.n();
    let limit = if n == 2 { MAX_LEN_FVB2 } else { MAX_LEN_FVBN };
    if max_len > limit {
        return Err(Error::GuardExceeded(max_len as u128, limit as u128));
    }
    let mut finding = FaithfulnessFinding {
        family: rep.family,
        n,
        kind: FindingKind::NoWitnessUpToLength,
        word: None,
        max_len: Some(max_len),
        binding: rep.binding.clone(),
        words_examined: 0,
        exhausted: false,
        uncertified: 0,
    };
    if n == 2 {
        for w in fvb2_enumerate(max_len).into_iter().filter(|w| !w.is_empty()) {
            finding.words_examined += 1;
            if rep.eval_word(&w)?.is_identity() {
                finding.kind = FindingKind::KernelWitness;
                finding.word = Some(w);
                return Ok(finding);
            }
        }
        return Ok(finding);
    }

    let gens: Vec<(Generator, Matrix<Rational>)> = rep
        .presentation
        .generators()
        .into_iter()
        .map(|g| rep.image(g).map(|m| (g, m.clone())))
        .collect::<Result<_>>()?;
    let identity = Matrix::identity(rep.dim, ());
    let mut seen: HashSet<Matrix<Rational>> = HashSet::from([identity.clone()]);
    let mut frontier: Vec<(Word, Matrix<Rational>)> = vec![(Word::empty(), identity)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, m) in &frontier {
            for (g, img) in &gens {
                if w.letters().last() == Some(g) {
                    continue;
                }
                let mut w2 = w.clone();
                w2.push(*g);
                let m2 = m.mul_unchecked(img);
                finding.words_examined += 1;
                if m2.is_identity() {
                    if certified_nontrivial(&w2, n) {
                        finding.kind = FindingKind::KernelWitness;
                        finding.word = Some(w2);
                        return Ok(finding);
                    }
                    finding.uncertified += 1;
                    continue;
                }
                if seen.insert(m2.clone()) {
                    next.push((w2, m2));
                }
            }
        }
        if next.is_empty() {
            finding.exhausted = true;
            break;
        }
        frontier = next;
    }
    Ok(finding)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicWitness {
    pub family: String,
    pub n: usize,
    pub constraint: String,
    pub word: String,
    /// The word evaluates to the identity for every index `i` checked.
    pub holds: bool,
    /// First image that is not the identity, if any.
    pub residual: Option<Matrix<RatFunc>>,
}

fn subs(pairs: &[(&str, &str)]) -> Result<BTreeMap<ParamName, RatFunc>> {
    pairs
        .iter()
        .map(|(k, v)| Ok((ParamName::new(k)?, v.parse()?)))
        .collect()
}

fn describe(pairs: &[(&str, &str)]) -> String {
    if pairs.is_empty() {
        return "none".into();
    }
    pairs.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>().join(", ")
}

/// `(letters)^power`, instantiated at every strand position `i`.
fn check(
    label: &str,
    rep: RepInstance<RatFunc>,
    pairs: &[(&str, &str)],
    letters: &[(GenKind, usize)],
    power: usize,
) -> Result<SymbolicWitness> {
    let rep = rep.substitute(&subs(pairs)?)?;
    let n = rep.n();
    let pattern: Word = Word::new(
        letters
            .iter()
            .map(|&(k, _)| Generator { kind: k, index: 1 })
            .collect(),
    );
    let word_label = if power == 1 {
        if n == 2 {
            pattern.to_string()
        } else {
            format!("{pattern}, shifted to every i")
        }
    } else {
        format!("({pattern})^{power}")
    };
    let mut residual = None;
    for i in 1..n {
        let w = Word::new(letters.iter().map(|&(k, _)| Generator { kind: k, index: i }).collect()).pow(power);
        let m = rep.eval_word(&w)?;
        if !m.is_identity() {
            residual = Some(m);
            break;
        }
    }
    Ok(SymbolicWitness {
        family: label.into(),
        n,
        constraint: describe(pairs),
        word: word_label,
        holds: residual.is_none(),
        residual,
    })
}

const RS: [(GenKind, usize); 2] = [(GenKind::Rho, 1), (GenKind::Sigma, 1)];
const SR: [(GenKind, usize); 2] = [(GenKind::Sigma, 1), (GenKind::Rho, 1)];
const S: [(GenKind, usize); 1] = [(GenKind::Sigma, 1)];

/// Every kernel element the faithfulness statements exhibit, under the
/// constraint exactly as stated.
pub fn symbolic_witnesses() -> Result<Vec<SymbolicWitness>> {
    let f = |id: FamilyId, n: usize| family(id, n);
    Ok(vec![
        check("λ1", f(FamilyId::Lambda(1), 2)?, &[("y", "b"), ("t", "d")], &RS, 1)?,
        check("λ1", f(FamilyId::Lambda(1), 2)?, &[("y", "-b"), ("t", "-d")], &RS, 2)?,
        check("λ2", f(FamilyId::Lambda(2), 2)?, &[("t", "c*y/2")], &RS, 4)?,
        check("λ4", f(FamilyId::Lambda(4), 2)?, &[("d", "b*z/2")], &SR, 4)?,
        check("γ1", f(FamilyId::Gamma(1), 4)?, &[], &S, 1)?,
        check("γ2", f(FamilyId::Gamma(2), 4)?, &[("y", "b")], &RS, 1)?,
        check("δ5", f(FamilyId::Delta(5), 4)?, &[("y", "x")], &RS, 1)?,
        check("δ6", f(FamilyId::Delta(6), 4)?, &[("y", "x")], &RS, 1)?,
        check("δ7", f(FamilyId::Delta(7), 4)?, &[], &RS, 1)?,
        check("δ8", f(FamilyId::Delta(8), 4)?, &[], &RS, 1)?,
    ])
}

/// Witnesses under the constraints and amendments the computations support
/// where the stated ones fail.
pub fn amended_witnesses() -> Result<Vec<SymbolicWitness>> {
    let mut out = vec![check("δ6", family(FamilyId::Delta(6), 4)?, &[("y", "1/x")], &RS, 1)?];
    for e in errata_candidates()? {
        let rep = assemble_local(4, &e.spec)?;
        let label = format!("{}*", e.family.pretty());
        out.push(match e.family {
            FamilyId::Delta(5) => check(&label, rep, &[("y", "1/x")], &RS, 1)?,
            _ => check(&label, rep, &[], &RS, 1)?,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralCheck {
    pub family: FamilyId,
    pub max_power: usize,
    /// `(σ₁ρ₁)ᵏ` and `(ρ₁σ₁)ᵏ` have the closed form for every `k ≤ max_power`.
    pub powers_ok: bool,
    /// `σ₁(ρ₁σ₁)ᵏ` and `(ρ₁σ₁)ᵏρ₁` have diagonal entries of opposite sign.
    pub odd_shapes_ok: bool,
    pub first_failure: Option<String>,
}

/// Checks the closed forms behind the faithfulness criterion of λ₆ and λ₇:
/// `(σ₁ρ₁)ᵏ = sᵏ [[1,0],[k·q,1]]` with `(s, q) = (1, c−z)` for λ₆ and
/// `(−1, c+z)` for λ₇, and that odd-length words never reach the identity.
pub fn dihedral_power_formula(id: FamilyId, max_power: usize) -> Result<DihedralCheck> {
    let (sign, q) = match id {
        FamilyId::Lambda(6) => (1i64, "c-z"),
        FamilyId::Lambda(7) => (-1i64, "c+z"),
        other => return Err(Error::UnknownFamily(format!("no dihedral formula for {}", other.tag()))),
    };
    let q: RatFunc = q.parse()?;
    let rep = family(id, 2)?;
    let s = rep.image(Generator::sigma(1))?.clone();
    let r = rep.image(Generator::rho(1))?.clone();
    let sr = s.mul(&r)?;
    let rs = r.mul(&s)?;
    let closed = |k: usize, q: &RatFunc| -> Result<Matrix<RatFunc>> {
        let sk = RatFunc::integer(sign.pow(k as u32));
        let lower = q.mul(&RatFunc::integer(k as i64));
        Ok(Matrix::from_rows(vec![vec![RatFunc::one(), RatFunc::zero()], vec![lower, RatFunc::one()]], ())?.scale(&sk))
    };
    let mut out = DihedralCheck {
        family: id,
        max_power,
        powers_ok: true,
        odd_shapes_ok: true,
        first_failure: None,
    };
    let (mut p_sr, mut p_rs) = (Matrix::identity(2, ()), Matrix::identity(2, ()));
    for k in 0..=max_power {
        if k > 0 {
            p_sr = p_sr.mul(&sr)?;
            p_rs = p_rs.mul(&rs)?;
            if p_sr != closed(k, &q)? || p_rs != closed(k, &q.neg())? {
                out.powers_ok = false;
                out.first_failure.get_or_insert(format!("power formula fails at k = {k}"));
            }
        }
        for (name, m) in [("w3", s.mul(&p_rs)?), ("w4", p_rs.mul(&r)?)] {
            let (a, d) = (m.get(0, 0), m.get(1, 1));
            let opposite = a.add(d).is_zero() && !a.is_zero();
            let exact = id != FamilyId::Lambda(6) || (a.is_one() && d.neg().is_one());
            if !(opposite && exact) {
                out.odd_shapes_ok = false;
                out.first_failure.get_or_insert(format!("{name} diagonal ({a}, {d}) at k = {k}"));
            }
        }
    }
    Ok(out)
}
