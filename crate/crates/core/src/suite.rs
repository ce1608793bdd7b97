//! The checks behind every CLI command, and the full suite run by
//! `report-all`. Each function returns report records; criterion records
//! carry `pass`/`fail`, disagreements with stated results are separate `finding`
//! records.

use std::collections::BTreeSet;

use serde_json::json;

use crate::analysis::{
    amended_witnesses, burnside_sweep, compare_irreducibility, dihedral_power_formula, kernel_search,
    random_bindings, symbolic_witnesses, BurnsideSummary, FindingKind, PmReading, Verdict, MAX_LEN_FVB2,
};
use crate::catalog::{
    assemble_local, default_n, errata_candidates, family, verify_relations, FamilyId, RelationReport,
};
use crate::classifier::{
    branch_solve, build_system, census_fvb_local, census_involutions_2x2, census_templates, classify_branches,
    compare_with_paper, SystemKind, Template,
};
use crate::error::Result;
use crate::report::{CheckRecord, Status, VerdictReport};
use crate::scalar::{ParamBinding, ParamName, Rational};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 1000;
/// Bindings per generic reducibility claim.
pub const BURNSIDE_SAMPLES: usize = 20;
/// Default kernel-search length on three or more strands.
pub const DEFAULT_LEN_FVBN: usize = 6;

fn failure_summary(r: &RelationReport) -> Vec<String> {
    r.failures()
        .map(|c| match &c.offending {
            Some(o) => format!("{}: entry ({},{}) differs by {}", c.relation, o.row, o.col, o.difference),
            None => c.relation.clone(),
        })
        .collect()
}

/// Relation check of one family at one `n`. A printed family that fails is
/// an errata finding.
pub fn verify_record(id: FamilyId, n: usize) -> Result<CheckRecord> {
    let rep = family(id, n)?;
    let r = verify_relations(&rep);
    let rid = format!("verify/{}/n{n}", id.tag());
    Ok(if r.all_pass() {
        CheckRecord::new(rid, Status::Pass, format!("all {} relation instances of {:?}_{n} hold exactly", r.passed, r.group))
    } else {
        let fails = failure_summary(&r);
        CheckRecord::new(
            rid,
            Status::Finding,
            format!("errata: {} of {} relations fail: {}", r.failed, r.checks.len(), fails.join("; ")),
        )
        .with_data(json!({ "failures": fails, "skipped": r.skipped }))
    })
}

pub fn verify_records(families: &[FamilyId], ns: &[usize]) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for &id in families {
        let ns: Vec<usize> = if ns.is_empty() {
            vec![default_n(id)]
        } else {
            ns.iter().copied().filter(|&n| id.check_n(n).is_ok()).collect()
        };
        for n in ns {
            out.push(verify_record(id, n)?);
        }
    }
    Ok(out)
}

fn vars(names: &[&str]) -> Vec<ParamName> {
    names.iter().map(|n| ParamName::new(n).expect("alphabet")).collect()
}

pub fn criterion1() -> Result<Vec<CheckRecord>> {
    let reports: Vec<_> = FamilyId::lambdas()
        .into_iter()
        .map(|id| family(id, 2).map(|r| verify_relations(&r)))
        .collect::<Result<_>>()?;
    let bad: Vec<String> = reports.iter().filter(|r| !r.all_pass()).map(|r| r.family.pretty()).collect();
    Ok(vec![CheckRecord::pass_if(
        "criterion/1",
        bad.is_empty(),
        if bad.is_empty() {
            "all twelve λ families satisfy every FVB_2 relation exactly".to_string()
        } else {
            format!("failing: {}", bad.join(", "))
        },
    )
    .with_data(reports.iter().map(|r| (r.family.tag(), r.passed)).collect::<Vec<_>>())])
}

pub fn criterion2() -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let mut unexplained = Vec::new();
    let errata = errata_candidates()?;
    let plan: Vec<(FamilyId, std::ops::RangeInclusive<usize>)> = FamilyId::gammas()
        .into_iter()
        .map(|g| (g, 3..=6))
        .chain(FamilyId::deltas().into_iter().map(|d| (d, 4..=6)))
        .collect();
    for (id, ns) in plan {
        let mut failing = Vec::new();
        for n in ns.clone() {
            let r = verify_relations(&family(id, n)?);
            if !r.all_pass() {
                failing.push((n, failure_summary(&r)));
            }
        }
        if failing.is_empty() {
            continue;
        }
        // A failure counts as a transcription erratum only if a one-entry
        // amendment of the printed block passes at every n.
        let amended = errata.iter().find(|e| e.family == id);
        let repaired = match amended {
            Some(e) => ns
                .clone()
                .map(|n| assemble_local(n, &e.spec).map(|r| verify_relations(&r).all_pass()))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|ok| ok),
            None => false,
        };
        if !repaired {
            unexplained.push(id.pretty());
        }
        let (n0, fails) = &failing[0];
        out.push(
            CheckRecord::new(
                format!("finding/errata/{}", id.tag()),
                Status::Finding,
                format!(
                    "{} as printed fails FVB_n relations (n = {}): {}{}",
                    id.pretty(),
                    failing.iter().map(|(n, _)| n.to_string()).collect::<Vec<_>>().join(","),
                    fails.join("; "),
                    amended
                        .filter(|_| repaired)
                        .map(|e| format!(". Amendment `{}` passes every relation", e.change))
                        .unwrap_or_default()
                ),
            )
            .with_data(json!({ "n": n0, "failures": fails })),
        );
    }
    out.insert(
        0,
        CheckRecord::pass_if(
            "criterion/2",
            unexplained.is_empty(),
            if unexplained.is_empty() {
                format!(
                    "γ₁, γ₂ pass for n=3..6 and δ₁..δ₈ for n=4..6, except {} transcription errata reported verbatim",
                    out.len()
                )
            } else {
                format!("relation failures not explained by a transcription erratum: {}", unexplained.join(", "))
            },
        ),
    );
    Ok(out)
}

pub fn criterion3() -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for kind in [SystemKind::Fvb2Local, SystemKind::FvbnHomog2Block] {
        let cmp = compare_with_paper(kind);
        out.push(
            CheckRecord::finding_unless(
                format!("classify/system/{kind}"),
                cmp.identical(),
                format!("{} generated vs {} printed equations, {} in common", cmp.generated, cmp.paper, cmp.common),
            )
            .with_data(&cmp),
        );
    }

    let full = build_system(SystemKind::Fvb2Local);
    let sigma_sys = full.restricted_to(&vars(&["a", "b", "c", "d"]));
    let sigma = branch_solve(&sigma_sys)?;
    let forms = classify_branches(&sigma, &Template::involution_forms(), false);
    let names: BTreeSet<String> = forms.iter().filter_map(|c| c.matched.as_ref()).map(|m| m.template.clone()).collect();
    let involution_ok = sigma.sound_for(&sigma_sys)
        && forms.iter().all(|c| c.matched.is_some())
        && names == ["form1", "form2", "form3"].iter().map(|s| s.to_string()).collect();

    let homog = build_system(SystemKind::FvbnHomog2Block);
    let gamma = branch_solve(&homog)?;
    let templates = census_templates(2)?;
    let classes = classify_branches(&gamma, &templates, true);
    let found: BTreeSet<String> = classes.iter().filter_map(|c| c.matched.as_ref()).map(|m| m.template.clone()).collect();
    let extras: Vec<&str> = classes.iter().filter(|c| c.matched.is_none()).map(|c| c.branch.as_str()).collect();
    let gamma_ok = gamma.sound_for(&homog) && ["trivial", "g1", "g2"].iter().all(|t| found.contains(*t));

    out.insert(
        0,
        CheckRecord::pass_if(
            "criterion/3",
            involution_ok && gamma_ok,
            format!(
                "involution system: {} sound branches naming {:?}; homogeneous system: {} sound branches naming {:?}",
                sigma.solutions.len(),
                names,
                gamma.solutions.len(),
                found
            ),
        )
        .with_data(json!({
            "involution_branches": forms,
            "homogeneous_branches": classes,
            "involution_case_tree": sigma.case_tree,
            "homogeneous_case_tree": gamma.case_tree,
        })),
    );
    if !extras.is_empty() {
        out.push(CheckRecord::new(
            "finding/classify/extra-branches",
            Status::Finding,
            format!("branches outside the stated types: {}", extras.join("; ")),
        ));
    }
    Ok(out)
}

pub fn census_records(primes: &[u64], block: usize, n_probe: Option<usize>) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let n_probe = n_probe.unwrap_or(if block == 2 { 4 } else { 5 });
    for &p in primes {
        if block == 2 {
            let inv = census_involutions_2x2(p)?;
            out.push(
                CheckRecord::finding_unless(
                    format!("census/involutions/p{p}"),
                    inv.unmatched.is_empty(),
                    format!("{} involutions among {} matrices, {} unmatched", inv.solutions, inv.total_candidates, inv.unmatched.len()),
                )
                .with_data(&inv),
            );
        }
        let c = census_fvb_local(p, block, n_probe)?;
        let confirmed = c.counterexamples().count();
        out.push(
            CheckRecord::finding_unless(
                format!("census/fvb/k{block}/p{p}/n{n_probe}"),
                c.unmatched.is_empty(),
                format!(
                    "{} survivors, matched {:?}, {} unmatched ({} confirmed over ℚ)",
                    c.solutions, c.matched, c.unmatched.len(), confirmed
                ),
            )
            .with_data(&c),
        );
    }
    Ok(out)
}

pub fn criterion4() -> Result<Vec<CheckRecord>> {
    let mut ok = true;
    let mut notes = Vec::new();
    for p in [3u64, 5, 7] {
        let r = census_involutions_2x2(p)?;
        ok &= r.unmatched.is_empty() && r.is_conserved();
        notes.push(format!("p={p}: {} involutions, {} unmatched", r.solutions, r.unmatched.len()));
        if p == 3 {
            ok &= r.total_candidates == 81 && r.solutions == 14;
        }
    }
    let fvb = census_fvb_local(3, 2, 4)?;
    ok &= fvb.unmatched.is_empty() && fvb.is_conserved();
    notes.push(format!("block 2, p=3, n=4: {} survivors matched as {:?}", fvb.solutions, fvb.matched));
    let mut out = vec![CheckRecord::pass_if("criterion/4", ok, notes.join("; ")).with_data(&fvb)];
    out.extend(census_records(&[3], 3, Some(5))?.into_iter().map(|mut r| {
        if r.status == Status::Finding {
            r.id = format!("finding/{}", r.id);
        }
        r
    }));
    Ok(out)
}

/// Irreducibility sweeps for every λ family (criteria 5 and 6).
pub fn criteria5_6(samples: usize, seed: u64) -> Result<Vec<CheckRecord>> {
    let mut c5 = true;
    let mut c6 = true;
    let mut findings = Vec::new();
    let mut table = Vec::new();
    for id in FamilyId::lambdas() {
        let readings: &[PmReading] = if id == FamilyId::Lambda(1) {
            &PmReading::ALL
        } else {
            &[PmReading::AllCombinations]
        };
        for &reading in readings {
            let r = compare_irreducibility(id, samples, seed, reading)?;
            c6 &= r.oracle_cross_agreements == r.sample_count;
            let primary = reading == PmReading::AllCombinations;
            match id {
                FamilyId::Lambda(3) | FamilyId::Lambda(5) => {
                    c5 &= r.systematic();
                    findings.push(
                        CheckRecord::new(
                            format!("finding/irreducibility/{}", id.tag()),
                            Status::Finding,
                            format!(
                                "{}: the stated iff-condition predicts irreducible at {} of {} bindings, but every binding is reducible ({})",
                                id.pretty(),
                                r.paper_irreducible,
                                r.sample_count,
                                r.notes.join("; ")
                            ),
                        )
                        .with_data(r.disagreements.iter().take(5).collect::<Vec<_>>()),
                    );
                }
                _ if primary => c5 &= r.disagreements.is_empty(),
                _ => findings.push(
                    CheckRecord::new(
                        format!("finding/irreducibility/{}/matched-signs", id.tag()),
                        Status::Finding,
                        format!(
                            "± reading: all sign combinations agree with the oracle on every sample; matched signs only disagrees on {} of {}",
                            r.disagreements.len(),
                            r.sample_count
                        ),
                    )
                    .with_data(r.disagreements.iter().take(5).collect::<Vec<_>>()),
                ),
            }
            table.push(json!({
                "family": id.tag(),
                "reading": reading,
                "samples": r.sample_count,
                "agreements": r.agreements,
                "disagreements": r.disagreements.len(),
                "oracle_cross_agreements": r.oracle_cross_agreements,
            }));
        }
    }
    let mut out = vec![
        CheckRecord::pass_if(
            "criterion/5",
            c5,
            format!("{samples} seeded bindings per λ family: λ₁, λ₂, λ₄, λ₆..λ₁₂ agree; λ₃, λ₅ systematic discrepancy flagged"),
        )
        .with_data(&table),
        CheckRecord::pass_if(
            "criterion/6",
            c6,
            "invariant-line and algebra-closure oracles agree on every sample of the sweep",
        ),
    ];
    out.extend(findings);
    Ok(out)
}

pub fn criterion7() -> Result<Vec<CheckRecord>> {
    let ws = symbolic_witnesses()?;
    let failing: Vec<String> = ws
        .iter()
        .filter(|w| !w.holds)
        .map(|w| format!("{} [{}] {}", w.family, w.constraint, w.word))
        .collect();
    let mut out = vec![CheckRecord::pass_if(
        "criterion/7",
        failing.is_empty(),
        if failing.is_empty() {
            format!("all {} stated witnesses evaluate to the identity", ws.len())
        } else {
            format!("{} of {} stated witnesses are not the identity: {}", failing.len(), ws.len(), failing.join("; "))
        },
    )
    .with_data(&ws)];
    for w in amended_witnesses()? {
        out.push(
            CheckRecord::new(
                format!("finding/witness/{}", w.family),
                if w.holds { Status::Finding } else { Status::Fail },
                format!("{} with [{}]: {} is {}the identity", w.family, w.constraint, w.word, if w.holds { "" } else { "not " }),
            )
            .with_data(&w),
        );
    }
    Ok(out)
}

fn lambda6_at(c: i64, z: i64) -> Result<crate::catalog::RepInstance<Rational>> {
    let b = ParamBinding::new()
        .with(ParamName::new("c")?, c)
        .with(ParamName::new("z")?, z);
    family(FamilyId::Lambda(6), 2)?.specialize(&b)
}

pub fn criterion8(seed: u64) -> Result<Vec<CheckRecord>> {
    let d6 = dihedral_power_formula(FamilyId::Lambda(6), 50)?;
    let d7 = dihedral_power_formula(FamilyId::Lambda(7), 50)?;
    let hit = kernel_search(&lambda6_at(1, 1)?, 4)?;
    let hit_ok = hit.kind == FindingKind::KernelWitness && hit.word.as_ref().map(|w| w.to_string()) == Some("s1 r1".into());
    let c = ParamName::new("c")?;
    let z = ParamName::new("z")?;
    let sym = family(FamilyId::Lambda(6), 2)?;
    let generic = random_bindings(FamilyId::Lambda(6), 2, 20, seed, |b| b.get(c) != b.get(z))?;
    let mut witnesses = Vec::new();
    for b in &generic {
        let f = kernel_search(&sym.specialize(b)?, 24)?;
        if f.kind == FindingKind::KernelWitness {
            witnesses.push(format!("{b}: {}", f.word.map(|w| w.to_string()).unwrap_or_default()));
        }
    }
    let ok = d6.powers_ok && d6.odd_shapes_ok && d7.powers_ok && d7.odd_shapes_ok && hit_ok && witnesses.is_empty();
    Ok(vec![CheckRecord::pass_if(
        "criterion/8",
        ok,
        format!(
            "power formula to N=50 (λ₆ {}, λ₇ {}); λ₆ at c=z=1 kernel word {}; {} bindings with c≠z: {} witnesses up to length 24",
            d6.powers_ok && d6.odd_shapes_ok,
            d7.powers_ok && d7.odd_shapes_ok,
            hit.word.map(|w| w.to_string()).unwrap_or_else(|| "none".into()),
            generic.len(),
            witnesses.len()
        ),
    )
    .with_data(json!({ "lambda6": d6, "lambda7": d7, "witnesses": witnesses }))])
}

fn burnside_record(s: &BurnsideSummary) -> CheckRecord {
    let split = s.unanimous.is_none();
    let detail = format!(
        "{} at n={}: closure dims {:?} of {}, verdict {}, stated: {}",
        s.family.pretty(),
        s.n,
        s.closure_dims,
        s.ambient_dim * s.ambient_dim,
        s.unanimous.map(|v| v.to_string()).unwrap_or_else(|| "split".into()),
        s.paper_claim.map(|v| v.to_string()).unwrap_or_else(|| "no claim".into()),
    );
    let by_binding: Vec<_> = s
        .verdicts
        .iter()
        .map(|v| json!({ "binding": v.binding, "verdict": v.verdict, "closure_dim": v.closure_dim }))
        .collect();
    let status = match s.agrees_with_paper() {
        Some(true) => Status::Pass,
        None if s.paper_claim.is_none() && !split => Status::Pass,
        _ => Status::Finding,
    };
    CheckRecord::new(format!("burnside/{}/n{}", s.family.tag(), s.n), status, detail).with_data(by_binding)
}

pub fn criterion9(seed: u64) -> Result<Vec<CheckRecord>> {
    let mut ok = true;
    let mut records = Vec::new();
    for n in 3..=7 {
        let s = burnside_sweep(FamilyId::Gamma(1), n, BURNSIDE_SAMPLES, seed)?;
        ok &= s.unanimous == Some(Verdict::Reducible) && s.closure_dims == BTreeSet::from([1 + (n - 1) * (n - 1)]);
        records.push(burnside_record(&s));
    }
    for id in FamilyId::deltas().into_iter().take(4) {
        let s = burnside_sweep(id, 10, BURNSIDE_SAMPLES, seed)?;
        ok &= s.unanimous == Some(Verdict::Reducible)
            && s.verdicts.iter().all(|v| v.witness.as_ref().is_some_and(|w| !w.is_zero()));
        records.push(burnside_record(&s));
    }
    let mut recorded = Vec::new();
    for (id, ns) in [(FamilyId::Gamma(2), 3..=5)].into_iter().chain(FamilyId::deltas().into_iter().skip(4).map(|d| (d, 10..=10))) {
        for n in ns {
            let s = burnside_sweep(id, n, BURNSIDE_SAMPLES, seed)?;
            ok &= s.samples >= BURNSIDE_SAMPLES;
            let mut r = burnside_record(&s);
            if r.status == Status::Finding {
                r.id = format!("finding/{}", r.id);
                if id == FamilyId::Gamma(2) {
                    r.detail.push_str("; irreducible (closure n²) exactly at the bindings with b ≠ y");
                }
            }
            if matches!(id, FamilyId::Delta(5) | FamilyId::Delta(7)) {
                r.detail.push_str("; computed on the printed matrices, which do not satisfy the relations");
            }
            recorded.push(r);
        }
    }
    let mut out = vec![CheckRecord::pass_if(
        "criterion/9",
        ok,
        "γ₁ closure 1+(n−1)² for n=3..7; δ₁..δ₄ reducible at n=10 with common fixed vectors; γ₂ and δ₅..δ₈ verdicts recorded over 20 bindings each",
    )];
    out.extend(records);
    out.extend(recorded);
    Ok(out)
}

/// Relation checks of every catalog entry at its default `n`, plus the
/// coverage assertion.
pub fn coverage() -> Result<Vec<CheckRecord>> {
    let all = FamilyId::all();
    let mut out = verify_records(&all, &[])?;
    let seen: BTreeSet<String> = out.iter().filter_map(|r| r.id.split('/').nth(1).map(String::from)).collect();
    let missing: Vec<String> = all.iter().map(|f| f.tag()).filter(|t| !seen.contains(t)).collect();
    out.insert(
        0,
        CheckRecord::pass_if(
            "coverage",
            missing.is_empty(),
            format!("{} catalog families covered; missing: {:?}", all.len() - missing.len(), missing),
        ),
    );
    Ok(out)
}

/// The whole acceptance suite (criteria 1–9 and catalog coverage) in fixed
/// order. Deterministic given the seed.
pub fn report_all(seed: u64) -> Result<VerdictReport> {
    let mut records = Vec::new();
    records.extend(criterion1()?);
    records.extend(criterion2()?);
    records.extend(criterion3()?);
    records.extend(criterion4()?);
    records.extend(criteria5_6(DEFAULT_SAMPLES, seed)?);
    records.extend(criterion7()?);
    records.extend(criterion8(seed)?);
    records.extend(criterion9(seed)?);
    records.extend(coverage()?);
    Ok(VerdictReport::new(json!({ "command": "report-all", "seed": seed }), records))
}

/// Irreducibility analysis: λ families against the stated conditions, the
/// others through algebra-closure sweeps.
/// Without an explicit `samples`, λ sweeps use [`DEFAULT_SAMPLES`] and closure
/// sweeps [`BURNSIDE_SAMPLES`].
pub fn analyze_records(families: &[FamilyId], ns: &[usize], samples: Option<usize>, seed: u64) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for &id in families {
        match id {
            FamilyId::Lambda(_) => {
                for reading in PmReading::ALL {
                    let r = compare_irreducibility(id, samples.unwrap_or(DEFAULT_SAMPLES), seed, reading)?;
                    out.push(
                        CheckRecord::finding_unless(
                            format!(
                                "analyze/{}/{}",
                                id.tag(),
                                match reading {
                                    PmReading::AllCombinations => "all-signs",
                                    PmReading::MatchedSigns => "matched-signs",
                                }
                            ),
                            r.disagreements.is_empty(),
                            format!(
                                "{} samples: {} agree, {} disagree{}",
                                r.sample_count,
                                r.agreements,
                                r.disagreements.len(),
                                if r.systematic() { " (systematic)" } else { "" }
                            ),
                        )
                        .with_data(&r),
                    );
                }
            }
            _ => {
                let ns: Vec<usize> = if ns.is_empty() { vec![default_n(id)] } else { ns.to_vec() };
                for n in ns {
                    id.check_n(n)?;
                    let s = burnside_sweep(id, n, samples.unwrap_or(BURNSIDE_SAMPLES), seed)?;
                    out.push(burnside_record(&s));
                }
            }
        }
    }
    Ok(out)
}

/// Kernel search at a binding (or a seeded random one), compared with the
/// stated faithfulness criteria where there is one.
pub fn faithfulness_records(
    families: &[FamilyId],
    n: Option<usize>,
    binding: Option<&ParamBinding>,
    max_len: Option<usize>,
    seed: u64,
) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    if families.is_empty() {
        out.extend(criterion7()?);
        for id in [FamilyId::Lambda(6), FamilyId::Lambda(7)] {
            let d = dihedral_power_formula(id, 50)?;
            out.push(
                CheckRecord::pass_if(format!("dihedral/{}", id.tag()), d.powers_ok && d.odd_shapes_ok, "power formula and odd-shape check up to N=50")
                    .with_data(&d),
            );
        }
        return Ok(out);
    }
    for &id in families {
        let n = n.unwrap_or(default_n(id));
        let sym = family(id, n)?;
        let b = match binding {
            Some(b) => b.clone(),
            None => random_bindings(id, n, 1, seed, |_| true)?.remove(0),
        };
        let rep = sym.specialize(&b)?;
        let max_len = max_len.unwrap_or(if n == 2 { MAX_LEN_FVB2 } else { DEFAULT_LEN_FVBN });
        let f = kernel_search(&rep, max_len)?;
        let found = f.kind == FindingKind::KernelWitness;
        let predicted = stated_unfaithful(id, &b);
        let detail = format!(
            "{} at [{b}], n={n}: {} ({} words examined{})",
            id.pretty(),
            match &f.word {
                Some(w) => format!("kernel word {w}"),
                None => format!("no kernel word up to length {max_len}"),
            },
            f.words_examined,
            if f.exhausted { ", image group exhausted" } else { "" }
        );
        let agrees = match predicted {
            Some(true) => found,
            Some(false) => !found,
            None => true,
        };
        out.push(CheckRecord::finding_unless(format!("faithfulness/{}/n{n}", id.tag()), agrees, detail).with_data(&f));
    }
    Ok(out)
}

/// `Some(true)` where a kernel element is asserted, `Some(false)` where
/// faithfulness is asserted, `None` where nothing is stated.
fn stated_unfaithful(id: FamilyId, b: &ParamBinding) -> Option<bool> {
    let get = |name: &str| b.get(ParamName::new(name).ok()?).cloned();
    match id {
        FamilyId::Lambda(3 | 5 | 8..=12) | FamilyId::Gamma(1) => Some(true),
        FamilyId::Delta(1..=4 | 7 | 8) => Some(true),
        FamilyId::Lambda(6) => Some(get("c")? == get("z")?),
        FamilyId::Lambda(7) => Some(get("c")? == -get("z")?),
        FamilyId::Gamma(2) if get("b")? == get("y")? => Some(true),
        _ => None,
    }
}
