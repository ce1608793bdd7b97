use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::braid::fvb_presentation;
use crate::catalog::local_images;
use crate::linalg::Matrix;
use crate::scalar::{ParamName, Poly, RatFunc, Scalar};

/// Polynomials that must all vanish, in the listed unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    pub unknowns: Vec<ParamName>,
    pub equations: Vec<Poly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    /// `σ₁² = ρ₁² = 1` for arbitrary 2×2 blocks.
    Fvb2Local,
    /// All flat virtual braid relations for homogeneous 2×2 blocks.
    FvbnHomog2Block,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemKind::Fvb2Local => "fvb2_local",
            SystemKind::FvbnHomog2Block => "fvbn_homog_2block",
        })
    }
}

impl PolySystem {
    pub fn new(equations: Vec<Poly>) -> PolySystem {
        let mut unknowns: Vec<ParamName> = equations.iter().flat_map(|e| e.vars()).collect();
        unknowns.sort();
        unknowns.dedup();
        PolySystem {
            unknowns,
            equations,
        }
    }

    /// Sub-system of the equations that only involve `vars`.
    pub fn restricted_to(&self, vars: &[ParamName]) -> PolySystem {
        PolySystem::new(
            self.equations
                .iter()
                .filter(|e| e.vars().iter().all(|v| vars.contains(v)))
                .cloned()
                .collect(),
        )
    }

    pub fn contains(&self, p: &Poly) -> bool {
        let n = p.normalized();
        self.equations.iter().any(|e| e.normalized() == n)
    }

    /// Every equation vanishes identically after substitution.
    pub fn satisfied_by(&self, subs: &BTreeMap<ParamName, RatFunc>) -> bool {
        let map = |p: ParamName| subs.get(&p).cloned();
        self.equations.iter().all(|e| {
            RatFunc::from_poly(e.clone())
                .substitute(&map)
                .map(|v| v.is_identically_zero())
                .unwrap_or(false)
        })
    }
}

fn symbolic_block(names: [&str; 4]) -> Matrix<RatFunc> {
    let e: Vec<RatFunc> = names.iter().map(|s| s.parse().expect("alphabet")).collect();
    Matrix::from_rows(vec![vec![e[0].clone(), e[1].clone()], vec![e[2].clone(), e[3].clone()]], ())
        .expect("square")
}

/// Expands every relation of `FVB_n` on generic blocks
/// `σ ↦ [[a,b],[c,d]]`, `ρ ↦ [[x,y],[z,t]]` and collects the entries of
/// `lhs − rhs`, normalized and deduplicated in order of first appearance.
/// Four strands already exhibit every relation type.
pub fn build_system(kind: SystemKind) -> PolySystem {
    let n = match kind {
        SystemKind::Fvb2Local => 2,
        SystemKind::FvbnHomog2Block => 4,
    };
    let pres = fvb_presentation(n).expect("n >= 2");
    let sigma = symbolic_block(["a", "b", "c", "d"]);
    let rho = symbolic_block(["x", "y", "z", "t"]);
    let images = local_images(n, n, &sigma, Some(&rho)).expect("block fits");
    let eval = |w: &crate::braid::Word| {
        w.letters()
            .iter()
            .fold(Matrix::identity(n, ()), |acc, g| acc.mul_unchecked(&images[g]))
    };
    let mut eqs: Vec<Poly> = Vec::new();
    for rel in &pres.relations {
        let diff = eval(&rel.lhs).sub(&eval(&rel.rhs)).expect("same dim");
        for e in diff.entries() {
            if e.is_zero() {
                continue;
            }
            debug_assert!(e.is_polynomial());
            let p = e.num().normalized();
            if !eqs.contains(&p) {
                eqs.push(p);
            }
        }
    }
    PolySystem::new(eqs)
}

/// The equations as printed for each system, in printed order.
pub fn paper_equations(kind: SystemKind) -> Vec<Poly> {
    let src: &[&str] = match kind {
        SystemKind::Fvb2Local => &[
            "a^2+b*c-1",
            "d*b+a*b",
            "d*c+a*c",
            "d^2+b*c-1",
            "x^2+y*z-1",
            "t*y+x*y",
            "t*z+x*z",
            "t^2+y*z-1",
        ],
        SystemKind::FvbnHomog2Block => &[
            "-1+a^2+b*c",
            "b*(a+d)",
            "c*(a+d)",
            "-1+b*c+d^2",
            "a*(-1+a+b*c)",
            "a*b*d",
            "a*c*d",
            "a*d*(a-d)",
            "d*(1-b*c-d)",
            "x*(-1+x+y*z)",
            "t*x*y",
            "t*x*z",
            "x*t*(x-t)",
            "t*(1-t-y*z)",
            "x*(-1+a+c*y)",
            "x*(b-y+d*y)",
            "c*t*x",
            "x*t*(a-d)",
            "t*(-b+y-a*y)",
            "t*(1-d-c*y)",
            "-1+x^2+y*z",
            "y*(t+x)",
            "z*(t+x)",
            "-1+t^2+y*z",
        ],
    };
    src.iter()
        .map(|s| s.parse::<RatFunc>().expect("transcription parses").num().clone())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemComparison {
    pub kind: SystemKind,
    pub generated: usize,
    pub paper: usize,
    pub common: usize,
    /// Generated equations with no normalized counterpart in the printed list.
    pub only_generated: Vec<String>,
    /// Printed equations (after normalization and deduplication) not generated.
    pub only_paper: Vec<String>,
    /// Printed equations that coincide after normalization.
    pub paper_duplicates: usize,
}

impl SystemComparison {
    pub fn identical(&self) -> bool {
        self.only_generated.is_empty() && self.only_paper.is_empty()
    }
}

pub fn compare_with_paper(kind: SystemKind) -> SystemComparison {
    let generated = build_system(kind).equations;
    let printed = paper_equations(kind);
    let mut paper: Vec<Poly> = Vec::new();
    for p in &printed {
        let n = p.normalized();
        if !paper.contains(&n) {
            paper.push(n);
        }
    }
    let only_generated: Vec<String> = generated
        .iter()
        .filter(|g| !paper.contains(g))
        .map(|g| g.to_string())
        .collect();
    let only_paper: Vec<String> = paper
        .iter()
        .filter(|p| !generated.contains(p))
        .map(|p| p.to_string())
        .collect();
    SystemComparison {
        kind,
        generated: generated.len(),
        paper: printed.len(),
        common: generated.len() - only_generated.len(),
        paper_duplicates: printed.len() - paper.len(),
        only_generated,
        only_paper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse::<RatFunc>().unwrap().num().clone()
    }

    #[test]
    fn fvb2_system_matches_print() {
        let sys = build_system(SystemKind::Fvb2Local);
        assert_eq!(sys.equations.len(), 8);
        assert!(sys.contains(&p("d*b + a*b")));
        assert!(compare_with_paper(SystemKind::Fvb2Local).identical());
    }

    #[test]
    fn gamma_substitutions_solve_homogeneous_system() {
        let sys = build_system(SystemKind::FvbnHomog2Block);
        let subs = |pairs: &[(&str, &str)]| -> BTreeMap<ParamName, RatFunc> {
            pairs
                .iter()
                .map(|(k, v)| (k.parse().unwrap(), v.parse().unwrap()))
                .collect()
        };
        let g1 = subs(&[("a", "1"), ("b", "0"), ("c", "0"), ("d", "1"), ("x", "0"), ("t", "0"), ("z", "1/y")]);
        assert!(sys.satisfied_by(&g1));
        let g2 = subs(&[("a", "0"), ("c", "1/b"), ("d", "0"), ("x", "0"), ("t", "0"), ("z", "1/y")]);
        assert!(sys.satisfied_by(&g2));
        let bad = subs(&[("a", "0"), ("c", "1/b"), ("d", "0"), ("x", "1"), ("t", "-1"), ("y", "0"), ("z", "0")]);
        assert!(!sys.satisfied_by(&bad));
    }
}
