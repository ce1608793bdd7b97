//! Acceptance criteria 1–10. Each test prints one `PASS`/`FAIL` line, then
//! asserts. Expected values come from computations written out here rather
//! than from the library's own bookkeeping.

use std::io::Write;

use fvblab_core::analysis::{
    burnside_sweep, compare_irreducibility, dihedral_power_formula, kernel_search, random_bindings, sweep_region,
    symbolic_witnesses, FindingKind, PmReading, Verdict,
};
use fvblab_core::braid::{Generator, Word};
use fvblab_core::catalog::{errata_candidates, family, verify_relations, FamilyId, RepInstance};
use fvblab_core::classifier::{census_fvb_local, census_involutions_2x2};
use fvblab_core::linalg::Matrix;
use fvblab_core::report::Status;
use fvblab_core::scalar::{ParamBinding, ParamName, RatFunc, Rational};
use fvblab_core::suite;

const SEED: u64 = 42;
const SAMPLES: usize = 1000;

/// Written straight to the process's stderr so the line survives the test
/// harness's output capture.
fn verdict(criterion: u8, ok: bool, detail: &str) {
    let line = format!("{} criterion {criterion}: {detail}\n", if ok { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
}

fn s(i: usize) -> Generator {
    Generator::sigma(i)
}

fn r(i: usize) -> Generator {
    Generator::rho(i)
}

/// Plain left-to-right product of generator images.
fn product<F: fvblab_core::scalar::Scalar>(rep: &RepInstance<F>, gens: &[Generator]) -> Matrix<F> {
    let mut acc = Matrix::identity(rep.image(gens[0]).unwrap().dim(), rep.ctx());
    for g in gens {
        acc = acc.mul(rep.image(*g).unwrap()).unwrap();
    }
    acc
}

fn q(v: i64) -> Rational {
    Rational::integer(v)
}

fn val(b: &ParamBinding, name: &str) -> Rational {
    b.get(ParamName::new(name).unwrap()).cloned().unwrap()
}

/// Determinant by elimination over ℚ.
fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = q(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else { return q(0) };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        d = &d * &m[col][col];
        for r in col + 1..n {
            let f = m[r][col].checked_div(&m[col][col]).unwrap();
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
        }
    }
    d
}

/// Two 2×2 involutions generate all of M₂ exactly when I, A, B, AB are
/// linearly independent (AB + BA lies in their span by Cayley–Hamilton).
fn irreducible_2x2(rep: &RepInstance<Rational>) -> bool {
    let a = rep.image(s(1)).unwrap().clone();
    let b = rep.image(r(1)).unwrap().clone();
    let ab = a.mul(&b).unwrap();
    let flat = |m: &Matrix<Rational>| m.entries().to_vec();
    let rows = vec![vec![q(1), q(0), q(0), q(1)], flat(&a), flat(&b), flat(&ab)];
    !det(rows).is_zero()
}

/// The stated irreducibility conditions, every ± combination quantified.
fn stated_irreducible(id: FamilyId, b: &ParamBinding) -> bool {
    let pm = [q(1), q(-1)];
    match id {
        FamilyId::Lambda(1) => {
            let (bb, d, y, t) = (val(b, "b"), val(b, "d"), val(b, "y"), val(b, "t"));
            pm.iter().all(|e1| pm.iter().all(|e2| &bb * &(&t + e1) != &y * &(&d + e2)))
        }
        FamilyId::Lambda(2) => {
            let (y, c, t) = (val(b, "y"), val(b, "c"), val(b, "t"));
            pm.iter().all(|e| &y * &c != &q(2) * &(&t + e))
        }
        FamilyId::Lambda(3) => pm.iter().all(|e| val(b, "y") != &val(b, "t") + e),
        FamilyId::Lambda(4) => {
            let (bb, z, d) = (val(b, "b"), val(b, "z"), val(b, "d"));
            pm.iter().all(|e| &bb * &z != &q(2) * &(&d + e))
        }
        FamilyId::Lambda(5) => pm.iter().all(|e| val(b, "b") != &val(b, "d") + e),
        _ => false,
    }
}

fn sweep(id: FamilyId) -> Vec<(ParamBinding, RepInstance<Rational>)> {
    let sym = family(id, 2).unwrap();
    random_bindings(id, 2, SAMPLES, SEED, sweep_region(id))
        .unwrap()
        .into_iter()
        .map(|b| {
            let rep = sym.specialize(&b).unwrap();
            (b, rep)
        })
        .collect()
}

#[test]
fn criterion_01_lambda_relations() {
    let mut bad = Vec::new();
    for id in FamilyId::lambdas() {
        let rep = family(id, 2).unwrap();
        // FVB₂ has no braid-type relations: only σ₁² = ρ₁² = 1.
        let identity = Matrix::<RatFunc>::identity(2, ());
        let direct = product(&rep, &[s(1), s(1)]) == identity && product(&rep, &[r(1), r(1)]) == identity;
        if !(direct && verify_relations(&rep).all_pass()) {
            bad.push(id.tag());
        }
    }
    verdict(1, bad.is_empty(), &format!("12 λ families on FVB₂, failing: {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_02_gamma_delta_relations() {
    let mut unexplained = Vec::new();
    let mut errata = Vec::new();
    let amendments = errata_candidates().unwrap();
    let plan = FamilyId::gammas().into_iter().map(|g| (g, 3..=6)).chain(FamilyId::deltas().into_iter().map(|d| (d, 4..=6)));
    for (id, ns) in plan {
        for n in ns {
            let rep = family(id, n).unwrap();
            // Spot-check a braid, a mixed and a far relation by hand.
            let braid = product(&rep, &[s(1), s(2), s(1)]) == product(&rep, &[s(2), s(1), s(2)]);
            let mixed = product(&rep, &[r(1), r(2), s(1)]) == product(&rep, &[s(2), r(1), r(2)]);
            let far = n < 4 || product(&rep, &[s(1), r(3)]) == product(&rep, &[r(3), s(1)]);
            let ok = verify_relations(&rep).all_pass();
            assert!(!ok || (braid && mixed && far), "{id} n={n}: library passes but direct products differ");
            if !ok {
                let fixed = amendments
                    .iter()
                    .find(|e| e.family == id)
                    .map(|e| verify_relations(&fvblab_core::catalog::assemble_local(n, &e.spec).unwrap()).all_pass())
                    .unwrap_or(false);
                if fixed {
                    errata.push(format!("{}@{n}", id.tag()));
                } else {
                    unexplained.push(format!("{}@{n}", id.tag()));
                }
            }
        }
    }
    let recs = suite::criterion2().unwrap();
    let reported = recs.iter().filter(|r| r.status == Status::Finding && r.detail.contains("fails FVB_n relations")).count();
    let ok = unexplained.is_empty() && recs[0].status == Status::Pass && reported == 2;
    verdict(
        2,
        ok,
        &format!("γ n=3..6, δ n=4..6; transcription errata reported verbatim: {errata:?}; unexplained: {unexplained:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_03_classification() {
    let recs = suite::criterion3().unwrap();
    let c3 = &recs[0];
    // The three involution forms, squared by hand over ℚ(b, c, d).
    let d = RatFunc::var(ParamName::D);
    let b = RatFunc::var(ParamName::B);
    let c = RatFunc::var(ParamName::C);
    let one = RatFunc::one();
    let form1 = Matrix::from_rows(vec![vec![one.clone(), RatFunc::zero()], vec![c, one.neg()]], ()).unwrap();
    let form2 = Matrix::from_rows(
        vec![vec![d.neg(), b.clone()], vec![one.sub(&d.mul(&d)).div(&b).unwrap(), d.clone()]],
        (),
    )
    .unwrap();
    let id2 = Matrix::<RatFunc>::identity(2, ());
    let forms_ok = [form1, form2, id2.clone()].iter().all(|m| m.mul(m).unwrap() == id2);
    let ok = forms_ok && c3.status == Status::Pass;
    verdict(3, ok, &c3.detail);
    assert!(ok);
}

#[test]
fn criterion_04_census() {
    let mut ok = true;
    let mut notes = Vec::new();
    for p in [3u64, 5, 7] {
        let r = census_involutions_2x2(p).unwrap();
        let brute = (0..p.pow(4))
            .filter(|k| {
                let (a, b, c, d) = (k % p, k / p % p, k / p / p % p, k / p / p / p);
                (a * a + b * c) % p == 1 && (a * b + b * d) % p == 0 && (c * a + d * c) % p == 0 && (c * b + d * d) % p == 1
            })
            .count();
        ok &= r.unmatched.is_empty() && r.solutions == brute;
        if p == 3 {
            ok &= r.total_candidates == 81 && brute == 14;
        }
        notes.push(format!("p={p}: {} of {} (brute force {brute})", r.solutions, r.total_candidates));
    }
    let fvb = census_fvb_local(3, 2, 4).unwrap();
    let names: Vec<&str> = fvb.matched.iter().filter(|(_, &v)| v > 0).map(|(k, _)| k.as_str()).collect();
    ok &= fvb.unmatched.is_empty() && names.iter().all(|n| ["trivial", "g1", "g2"].contains(n));
    notes.push(format!("FVB block 2 p=3 n=4: {:?}", fvb.matched));
    verdict(4, ok, &notes.join("; "));
    assert!(ok);
}

#[test]
fn criterion_05_irreducibility_conditions() {
    let mut ok = true;
    let mut notes = Vec::new();
    for id in FamilyId::lambdas() {
        let samples = sweep(id);
        let agree = samples.iter().filter(|(b, rep)| stated_irreducible(id, b) == irreducible_2x2(rep)).count();
        let lib = compare_irreducibility(id, SAMPLES, SEED, PmReading::AllCombinations).unwrap();
        ok &= lib.agreements == agree && lib.sample_count == SAMPLES;
        match id {
            FamilyId::Lambda(3) | FamilyId::Lambda(5) => {
                // Every binding is reducible; the stated condition misses that.
                let all_reducible = samples.iter().all(|(_, rep)| !irreducible_2x2(rep));
                ok &= all_reducible && agree < SAMPLES && lib.systematic();
                notes.push(format!("{}: flagged, {agree}/{SAMPLES} agree", id.tag()));
            }
            FamilyId::Lambda(6..=12) => {
                ok &= agree == SAMPLES && samples.iter().all(|(_, rep)| !irreducible_2x2(rep));
            }
            _ => {
                ok &= agree == SAMPLES;
                notes.push(format!("{}: {agree}/{SAMPLES}", id.tag()));
            }
        }
    }
    verdict(5, ok, &format!("{}; λ6..λ12 reducible at every sample", notes.join(", ")));
    assert!(ok);
}

#[test]
fn criterion_06_oracles_agree() {
    let mut ok = true;
    for id in FamilyId::lambdas() {
        let lib = compare_irreducibility(id, SAMPLES, SEED, PmReading::AllCombinations).unwrap();
        ok &= lib.oracle_cross_agreements == SAMPLES && lib.oracle_cross_mismatches.is_empty();
        for (_, rep) in sweep(id) {
            let line = fvblab_core::analysis::common_invariant_line(&rep).unwrap();
            ok &= line.is_some() != irreducible_2x2(&rep);
        }
    }
    verdict(6, ok, "invariant-line, closure and span{I,A,B,AB} verdicts coincide on all 12×1000 samples");
    assert!(ok);
}

#[test]
fn criterion_07_symbolic_witnesses() {
    let ws = symbolic_witnesses().unwrap();
    let failing: Vec<String> = ws.iter().filter(|w| !w.holds).map(|w| format!("{} [{}]", w.family, w.constraint)).collect();
    // Independent look at the δ₆ entry: at x = y = 2 the product ρ₁σ₁ is
    // diag(.., x², x⁻², ..), not the identity.
    let d6 = family(FamilyId::Delta(6), 4)
        .unwrap()
        .specialize(&ParamBinding::parse("x=2,y=2").unwrap())
        .unwrap();
    let d6_identity = product(&d6, &[r(1), s(1)]).is_identity();
    let ok = failing.is_empty();
    verdict(
        7,
        ok,
        &format!(
            "{} of {} witnesses evaluate to I; not the identity: {failing:?}; δ6 ρ1σ1 at x=y=2 is I: {d6_identity}",
            ws.len() - failing.len(),
            ws.len()
        ),
    );
    assert!(ok, "stated witnesses that are not the identity: {failing:?}");
}

#[test]
fn criterion_08_dihedral_kernel() {
    let mut ok = true;
    for id in [FamilyId::Lambda(6), FamilyId::Lambda(7)] {
        let d = dihedral_power_formula(id, 50).unwrap();
        ok &= d.powers_ok && d.odd_shapes_ok;
    }
    let sym = family(FamilyId::Lambda(6), 2).unwrap();
    let hit = kernel_search(&sym.specialize(&ParamBinding::parse("c=1,z=1").unwrap()).unwrap(), 24).unwrap();
    ok &= hit.kind == FindingKind::KernelWitness && hit.word.as_ref().map(|w| w.to_string()).as_deref() == Some("s1 r1");

    let (c, z) = (ParamName::new("c").unwrap(), ParamName::new("z").unwrap());
    let generic = random_bindings(FamilyId::Lambda(6), 2, 20, SEED, |b| b.get(c) != b.get(z)).unwrap();
    let mut witnesses = 0;
    for b in &generic {
        let rep = sym.specialize(b).unwrap();
        let found = kernel_search(&rep, 24).unwrap().kind == FindingKind::KernelWitness;
        // Reduced FVB₂ words are alternating; even ones are powers of σρ or
        // ρσ, odd ones are conjugates of σ or ρ. So up to length 24 the
        // kernel is trivial iff σ, ρ ≠ I and (σρ)^k ≠ I for k ≤ 12.
        let sr = product(&rep, &[s(1), r(1)]);
        let mut pow = sr.clone();
        let mut direct = rep.image(s(1)).unwrap().is_identity() || rep.image(r(1)).unwrap().is_identity();
        for _ in 0..12 {
            direct |= pow.is_identity();
            pow = pow.mul(&sr).unwrap();
        }
        ok &= found == direct;
        witnesses += usize::from(found);
    }
    ok &= generic.len() == 20 && witnesses == 0 && rep_word_len(&hit.word) == 2;
    verdict(8, ok, &format!("N=50 power formula; λ6(c=z=1) kernel word s1 r1; {witnesses} witnesses at 20 bindings c≠z"));
    assert!(ok);
}

fn rep_word_len(w: &Option<Word>) -> usize {
    w.as_ref().map(Word::len).unwrap_or(0)
}

#[test]
fn criterion_09_reducibility() {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 3..=7 {
        let s = burnside_sweep(FamilyId::Gamma(1), n, 20, SEED).unwrap();
        let expected = 1 + (n - 1) * (n - 1);
        ok &= s.unanimous == Some(Verdict::Reducible) && s.closure_dims.iter().all(|&d| d == expected);
    }
    notes.push("γ1 closure 1+(n−1)² for n=3..7".to_string());
    for id in FamilyId::deltas().into_iter().take(4) {
        let s = burnside_sweep(id, 10, 20, SEED).unwrap();
        ok &= s.unanimous == Some(Verdict::Reducible);
        let sym = family(id, 10).unwrap();
        for v in &s.verdicts {
            let rep = sym.specialize(&v.binding).unwrap();
            let w = v.witness.as_ref().expect("fixed vectors exhibited");
            // Every basis vector is fixed by every generator image.
            for x in w.basis() {
                ok &= rep.generator_images().iter().all(|m| &m.apply(x).unwrap() == x);
            }
            ok &= !w.is_zero();
        }
    }
    notes.push("δ1..δ4 at n=10 fix explicit vectors".to_string());
    for (id, ns) in [(FamilyId::Gamma(2), 3..=5)].into_iter().chain(FamilyId::deltas().into_iter().skip(4).map(|d| (d, 10..=10))) {
        for n in ns {
            let s = burnside_sweep(id, n, 20, SEED).unwrap();
            ok &= s.samples >= 20 && s.verdicts.len() == s.samples;
            notes.push(format!(
                "{}@{n}: {} (dims {:?})",
                id.tag(),
                s.unanimous.map(|v| v.to_string()).unwrap_or_else(|| "split".into()),
                s.closure_dims
            ));
        }
    }
    verdict(9, ok, &notes.join("; "));
    assert!(ok);
}

#[test]
fn criterion_10_determinism() {
    let strip = |seed| {
        let mut r = suite::report_all(seed).unwrap();
        r.generated_at = None;
        r
    };
    let a = strip(SEED);
    let b = strip(SEED);
    let other = strip(SEED + 1);
    let statuses = |r: &fvblab_core::report::VerdictReport| r.records.iter().map(|c| (c.id.clone(), c.status)).collect::<Vec<_>>();
    let identical = a.to_json() == b.to_json();
    let same_shape = statuses(&a) == statuses(&other) && a.to_json() != other.to_json();
    let covered = a.records.iter().any(|r| r.id == "coverage" && r.status == Status::Pass);
    let ok = identical && same_shape && covered;
    verdict(
        10,
        ok,
        &format!(
            "report-all seed {SEED} byte-identical across runs: {identical}; seed {} same statuses, different samples: {same_shape}",
            SEED + 1
        ),
    );
    assert!(ok);
}
