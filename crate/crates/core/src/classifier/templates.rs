//! Membership of concrete (or symbolic) blocks in a parametric family.
//!
//! Every parameter of a built-in family occurs as a bare entry `p` or `-p`
//! of one of its blocks, so membership is decided by reading the parameters
//! off the candidate, re-evaluating the family blocks at them, and comparing.
//! Optional per-block signs implement the `±` equivalence.

use std::collections::BTreeMap;

use serde::Serialize;

use super::solver::{BranchSolution, SolveOutcome};
use crate::catalog::FamilyId;
use crate::linalg::{ratfunc_matrix, Matrix};
use crate::scalar::{ParamName, RatFunc, Scalar};

#[derive(Clone, Debug)]
pub struct Template {
    pub name: String,
    pub blocks: Vec<Matrix<RatFunc>>,
    pub constraints: Vec<RatFunc>,
    /// Where each parameter is read from: (param, block, row, col, negated).
    extract: Vec<(ParamName, usize, usize, usize, bool)>,
}

impl Template {
    pub fn new(name: &str, blocks: Vec<Matrix<RatFunc>>, constraints: Vec<RatFunc>) -> Template {
        let mut params: Vec<ParamName> = blocks
            .iter()
            .flat_map(|b| b.entries().iter().flat_map(|e| e.vars()).collect::<Vec<_>>())
            .chain(constraints.iter().flat_map(|c| c.vars()))
            .collect();
        params.sort();
        params.dedup();
        let extract = params
            .into_iter()
            .map(|p| {
                let v = RatFunc::var(p);
                let nv = v.neg();
                blocks
                    .iter()
                    .enumerate()
                    .find_map(|(bi, b)| {
                        let d = b.dim();
                        (0..d * d).find_map(|k| {
                            let e = b.get(k / d, k % d);
                            if *e == v {
                                Some((p, bi, k / d, k % d, false))
                            } else if *e == nv {
                                Some((p, bi, k / d, k % d, true))
                            } else {
                                None
                            }
                        })
                    })
                    .unwrap_or_else(|| panic!("{name}: parameter {p} is not a bare entry"))
            })
            .collect();
        Template {
            name: name.to_string(),
            blocks,
            constraints,
            extract,
        }
    }

    pub fn family(id: FamilyId) -> crate::Result<Template> {
        let spec = id.spec()?;
        let mut blocks = vec![spec.sigma];
        blocks.extend(spec.rho);
        Ok(Template::new(&id.tag(), blocks, spec.constraints))
    }

    /// Both generators acting trivially.
    pub fn trivial(block_size: usize) -> Template {
        let id = Matrix::identity(block_size, ());
        Template::new("trivial", vec![id.clone(), id], vec![])
    }

    /// The three shapes of a 2×2 involution: `[[1,0],[c,-1]]`,
    /// `[[-d,b],[(1-d²)/b,d]]` with `b ≠ 0`, and `I` (each up to sign).
    pub fn involution_forms() -> Vec<Template> {
        vec![
            Template::new(
                "form1",
                vec![ratfunc_matrix(&[&["1", "0"], &["c", "-1"]]).expect("static")],
                vec![],
            ),
            Template::new(
                "form2",
                vec![ratfunc_matrix(&[&["-d", "b"], &["(1-d^2)/b", "d"]]).expect("static")],
                vec!["b".parse().expect("static")],
            ),
            Template::new(
                "form3",
                vec![ratfunc_matrix(&[&["1", "0"], &["0", "1"]]).expect("static")],
                vec![],
            ),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TemplateMatch {
    pub template: String,
    /// Sign applied to each block (all `+1` unless signs were needed).
    pub signs: Vec<i8>,
    pub params: BTreeMap<String, String>,
}

fn sign_patterns(k: usize, allow: bool) -> Vec<Vec<i8>> {
    if !allow {
        return vec![vec![1; k]];
    }
    (0..1usize << k)
        .map(|mask| (0..k).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

/// Whether `blocks` is an instance of `t`, possibly after flipping the sign
/// of individual blocks.
pub fn match_template<F: Scalar>(t: &Template, blocks: &[Matrix<F>], allow_signs: bool) -> Option<TemplateMatch> {
    if blocks.len() != t.blocks.len() || blocks.iter().zip(&t.blocks).any(|(b, tb)| b.dim() != tb.dim()) {
        return None;
    }
    let ctx = blocks[0].ctx().clone();
    for signs in sign_patterns(blocks.len(), allow_signs) {
        let signed: Vec<Matrix<F>> = blocks
            .iter()
            .zip(&signs)
            .map(|(b, &s)| if s < 0 { b.neg() } else { b.clone() })
            .collect();
        let values: BTreeMap<ParamName, F> = t
            .extract
            .iter()
            .map(|&(p, bi, r, c, negated)| {
                let v = signed[bi].get(r, c).clone();
                (p, if negated { v.negated() } else { v })
            })
            .collect();
        let assign = |p: ParamName| values.get(&p).cloned();
        let constraints_ok = t.constraints.iter().all(|c| {
            c.eval_in::<F>(&assign, &ctx)
                .map(|v| !v.is_zero())
                .unwrap_or(false)
        });
        if !constraints_ok {
            continue;
        }
        let equal = t.blocks.iter().zip(&signed).all(|(tb, b)| {
            tb.map::<F>(ctx.clone(), |e| e.eval_in::<F>(&assign, &ctx))
                .map(|m| m == *b)
                .unwrap_or(false)
        });
        if equal {
            return Some(TemplateMatch {
                template: t.name.clone(),
                signs,
                params: values.iter().map(|(p, v)| (p.name(), v.to_string())).collect(),
            });
        }
    }
    None
}

/// First template (in list order) that matches.
pub fn match_first<F: Scalar>(ts: &[Template], blocks: &[Matrix<F>], allow_signs: bool) -> Option<TemplateMatch> {
    ts.iter().find_map(|t| match_template(t, blocks, allow_signs))
}

/// The ansatz blocks `[[a,b],[c,d]]` (and `[[x,y],[z,t]]`) under a solver
/// branch.
pub fn branch_blocks(sol: &BranchSolution, with_rho: bool) -> Vec<Matrix<RatFunc>> {
    let block = |names: [&str; 4]| {
        let v: Vec<RatFunc> = names
            .iter()
            .map(|n| sol.value(ParamName::new(n).expect("alphabet")))
            .collect();
        Matrix::from_rows(vec![v[..2].to_vec(), v[2..].to_vec()], ()).expect("2x2")
    };
    let mut out = vec![block(["a", "b", "c", "d"])];
    if with_rho {
        out.push(block(["x", "y", "z", "t"]));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchClass {
    pub branch: String,
    pub provenance: Vec<String>,
    /// `None` when the branch is outside every supplied template.
    pub matched: Option<TemplateMatch>,
}

/// Names each solver branch by the first template it is a (signed) instance of.
pub fn classify_branches(outcome: &SolveOutcome, templates: &[Template], with_rho: bool) -> Vec<BranchClass> {
    outcome
        .solutions
        .iter()
        .map(|sol| BranchClass {
            branch: sol.describe(),
            provenance: sol.provenance.clone(),
            matched: match_first(templates, &branch_blocks(sol, with_rho), true),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_matrix;
    use crate::scalar::{FpElem, Rational};

    #[test]
    fn involution_forms_over_q() {
        let forms = Template::involution_forms();
        let m = int_matrix::<Rational>(&[&[-1, 0], &[5, 1]], ()).unwrap();
        let hit = match_first(&forms, &[m], true).unwrap();
        assert_eq!(hit.template, "form1");
        assert_eq!(hit.signs, [-1]);
        assert_eq!(hit.params["c"], "-5");
        let m = int_matrix::<Rational>(&[&[-3, 2], &[-4, 3]], ()).unwrap();
        assert_eq!(match_first(&forms, &[m], false).unwrap().template, "form2");
        let m = int_matrix::<Rational>(&[&[1, 1], &[0, 1]], ()).unwrap();
        assert!(match_first(&forms, &[m], true).is_none());
    }

    #[test]
    fn family_templates_over_fp() {
        let t = Template::family(FamilyId::Gamma(2)).unwrap();
        let s = int_matrix::<FpElem>(&[&[0, 2], &[2, 0]], 3).unwrap();
        let r = int_matrix::<FpElem>(&[&[0, 1], &[1, 0]], 3).unwrap();
        let hit = match_template(&t, &[s, r], false).unwrap();
        assert_eq!(hit.params["b"], "2");
        let t1 = Template::family(FamilyId::Gamma(1)).unwrap();
        let s = int_matrix::<FpElem>(&[&[0, 2], &[2, 0]], 3).unwrap();
        let r = int_matrix::<FpElem>(&[&[0, 1], &[1, 0]], 3).unwrap();
        assert!(match_template(&t1, &[s, r], true).is_none());
    }

    #[test]
    fn every_family_template_builds() {
        for f in FamilyId::all() {
            Template::family(f).unwrap();
        }
    }

    #[test]
    fn solver_branches_are_named() {
        use crate::classifier::{branch_solve, build_system, SystemKind};
        let sys = build_system(SystemKind::Fvb2Local);
        let vars: Vec<ParamName> = ["a", "b", "c", "d"].iter().map(|n| ParamName::new(n).unwrap()).collect();
        let out = branch_solve(&sys.restricted_to(&vars)).unwrap();
        let classes = classify_branches(&out, &Template::involution_forms(), false);
        let mut names: Vec<&str> = classes.iter().map(|c| c.matched.as_ref().unwrap().template.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names, ["form1", "form2", "form3"]);
    }
}
