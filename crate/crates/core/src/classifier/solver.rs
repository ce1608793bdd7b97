//! Case-splitting solver for the involution and homogeneity systems.
//!
//! Only two moves are available, mirroring the hand derivation:
//! splitting on an equation that factors (`f·g = 0` gives `f = 0`, or
//! `f ≠ 0, g = 0`), and solving an equation that is linear in one unknown
//! (branching on whether the coefficient vanishes when it is not a constant).
//! Anything outside that fragment is reported as stuck rather than guessed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::factor::factor_poly;
use super::system::PolySystem;
use crate::error::{Error, Result};
use crate::scalar::{ParamName, Poly, RatFunc};

const MAX_DEPTH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchSolution {
    /// Solved unknowns, in terms of the free ones.
    pub substitutions: BTreeMap<ParamName, RatFunc>,
    /// Polynomials that must not vanish on this branch.
    pub side_conditions: Vec<Poly>,
    /// The case split decisions leading here, outermost first.
    pub provenance: Vec<String>,
    pub free: Vec<ParamName>,
}

impl BranchSolution {
    /// Value of an unknown on this branch (itself when free).
    pub fn value(&self, p: ParamName) -> RatFunc {
        self.substitutions
            .get(&p)
            .cloned()
            .unwrap_or_else(|| RatFunc::var(p))
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .substitutions
            .iter()
            .map(|(k, v)| format!("{k} = {v}"))
            .collect();
        if !self.side_conditions.is_empty() {
            let side: Vec<String> = self.side_conditions.iter().map(|s| format!("{s} != 0")).collect();
            parts.push(format!("[{}]", side.join(", ")));
        }
        parts.join(", ")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveOutcome {
    pub solutions: Vec<BranchSolution>,
    pub dead_branches: usize,
    /// Indented text rendering of the case analysis.
    pub case_tree: String,
}

impl SolveOutcome {
    /// Every solution substituted into `sys` vanishes identically.
    pub fn sound_for(&self, sys: &PolySystem) -> bool {
        self.solutions.iter().all(|s| sys.satisfied_by(&s.substitutions))
    }
}

#[derive(Clone, Debug)]
struct State {
    subs: BTreeMap<ParamName, RatFunc>,
    nonzero: Vec<Poly>,
    eqs: Vec<Poly>,
    path: Vec<String>,
}

enum Simplified {
    Live(State),
    Dead(String),
}

fn eq_key(p: &Poly) -> (u32, usize, String) {
    (p.total_degree(), p.term_count(), p.to_string())
}

impl State {
    fn is_known_nonzero(&self, f: &Poly) -> bool {
        f.is_constant() && !f.is_zero() || self.nonzero.contains(&f.normalized())
    }

    fn add_nonzero(&mut self, p: &Poly) -> std::result::Result<(), String> {
        if p.is_zero() {
            return Err("a nonvanishing condition became 0".into());
        }
        for f in factor_poly(p).distinct() {
            if !self.nonzero.contains(&f) {
                self.nonzero.push(f);
            }
        }
        Ok(())
    }

    /// Replace every equation by the product of its distinct factors that are
    /// not known to be nonzero; detect `c = 0` with `c ≠ 0` constant.
    fn simplify(mut self) -> Simplified {
        let mut out: Vec<Poly> = Vec::new();
        for e in &self.eqs {
            if e.is_zero() {
                continue;
            }
            if e.is_constant() {
                return Simplified::Dead(format!("{e} = 0"));
            }
            let kept: Vec<Poly> = factor_poly(e)
                .distinct()
                .into_iter()
                .filter(|f| !self.is_known_nonzero(f))
                .collect();
            if kept.is_empty() {
                return Simplified::Dead(format!("{e} = 0 contradicts the side conditions"));
            }
            let radical = kept.iter().fold(Poly::one(), |acc, f| &acc * f).normalized();
            if !out.contains(&radical) {
                out.push(radical);
            }
        }
        out.sort_by_key(eq_key);
        self.eqs = out;
        Simplified::Live(self)
    }

    fn substitute(mut self, u: ParamName, value: &RatFunc) -> Simplified {
        let map = |p: ParamName| if p == u { Some(value.clone()) } else { None };
        let apply = |r: &RatFunc| r.substitute(&map).expect("denominators are side conditions");
        for v in self.subs.values_mut() {
            *v = apply(v);
        }
        self.subs.insert(u, value.clone());
        self.eqs = self
            .eqs
            .iter()
            .map(|e| apply(&RatFunc::from_poly(e.clone())).num().clone())
            .collect();
        let old = std::mem::take(&mut self.nonzero);
        for f in old.iter().chain(std::iter::once(value.den())) {
            let g = apply(&RatFunc::from_poly(f.clone())).num().clone();
            if let Err(why) = self.add_nonzero(&g) {
                return Simplified::Dead(format!("{why} ({f} after {u} = {value})"));
            }
        }
        self.nonzero.retain(|f| !f.is_constant());
        self.simplify()
    }
}

/// The linear part of `e` in `u`: `e = A·u + B` with `A`, `B` free of `u`.
fn linear_in(e: &Poly, u: ParamName) -> Option<(Poly, Poly)> {
    if e.degree_in(u) != 1 {
        return None;
    }
    let c = e.coefficients_in(u);
    Some((c[1].clone(), c[0].clone()))
}

fn solved_value(a: &Poly, b: &Poly) -> RatFunc {
    RatFunc::new(-b, a.clone()).expect("coefficient is nonzero")
}

struct Solver {
    solutions: Vec<BranchSolution>,
    dead: usize,
    tree: String,
    unknowns: Vec<ParamName>,
}

impl Solver {
    fn line(&mut self, depth: usize, text: &str) {
        let _ = writeln!(self.tree, "{}{}", "  ".repeat(depth), text);
    }

    fn run(&mut self, state: State, depth: usize) -> Result<()> {
        let mut state = match state.simplify() {
            Simplified::Live(s) => s,
            Simplified::Dead(why) => {
                self.dead += 1;
                self.line(depth, &format!("x contradiction: {why}"));
                return Ok(());
            }
        };
        let mut steps = 0;
        loop {
            if depth + steps > MAX_DEPTH {
                return Err(Error::SolverStuck(format!(
                    "depth limit reached at {}",
                    state.path.join(" / ")
                )));
            }
            if state.eqs.is_empty() {
                self.emit(state, depth);
                return Ok(());
            }
            // Linear with a constant (or already nonzero) coefficient: no split.
            if let Some((e, u, a, b)) = self.pick_linear(&state, true) {
                let v = solved_value(&a, &b);
                self.line(depth, &format!("{e} = 0  =>  {u} = {v}"));
                state.path.push(format!("{u} = {v}"));
                state = match state.substitute(u, &v) {
                    Simplified::Live(s) => s,
                    Simplified::Dead(why) => {
                        self.dead += 1;
                        self.line(depth, &format!("x contradiction: {why}"));
                        return Ok(());
                    }
                };
                steps += 1;
                continue;
            }
            if let Some((idx, factors)) = state
                .eqs
                .iter()
                .enumerate()
                .map(|(i, e)| (i, factor_poly(e).distinct()))
                .find(|(_, f)| f.len() >= 2)
            {
                let e = state.eqs[idx].clone();
                let shown: Vec<String> = factors.iter().map(|f| format!("({f})")).collect();
                self.line(depth, &format!("{e} = 0  splits as {}", shown.join("*")));
                for (k, f) in factors.iter().enumerate() {
                    let mut child = state.clone();
                    child.eqs[idx] = f.clone();
                    let mut label = format!("{f} = 0");
                    let prior = &factors[..k];
                    if !prior.is_empty() {
                        let ne: Vec<String> = prior.iter().map(|g| format!("{g} != 0")).collect();
                        label.push_str(&format!(", {}", ne.join(", ")));
                    }
                    self.line(depth + 1, &format!("case {label}"));
                    child.path.push(label);
                    let mut ok = true;
                    for g in prior {
                        ok &= child.add_nonzero(g).is_ok();
                    }
                    if ok {
                        self.run(child, depth + 2)?;
                    }
                }
                return Ok(());
            }
            if let Some((e, u, a, b)) = self.pick_linear(&state, false) {
                let v = solved_value(&a, &b);
                self.line(depth, &format!("{e} = 0 is linear in {u} with coefficient {a}"));
                let mut nz = state.clone();
                let label = format!("{a} != 0, {u} = {v}");
                self.line(depth + 1, &format!("case {label}"));
                nz.path.push(label);
                if nz.add_nonzero(&a).is_ok() {
                    match nz.substitute(u, &v) {
                        Simplified::Live(s) => self.run(s, depth + 2)?,
                        Simplified::Dead(why) => {
                            self.dead += 1;
                            self.line(depth + 2, &format!("x contradiction: {why}"));
                        }
                    }
                }
                let mut z = state;
                let label = format!("{a} = 0, {b} = 0");
                self.line(depth + 1, &format!("case {label}"));
                z.path.push(label);
                z.eqs.retain(|x| *x != e);
                z.eqs.push(a);
                z.eqs.push(b);
                self.run(z, depth + 2)?;
                return Ok(());
            }
            let shown: Vec<String> = state.eqs.iter().map(|e| e.to_string()).collect();
            return Err(Error::SolverStuck(format!(
                "no strategy applies to {{{}}} after [{}]",
                shown.join(", "),
                state.path.join(" / ")
            )));
        }
    }

    /// First (equation, unknown) pair that is linear. With `direct`, only
    /// coefficients that are constants or known to be nonzero qualify;
    /// otherwise the simplest coefficient wins, ties going to the later
    /// unknown (so `bc = 1` is solved as `c = 1/b`).
    fn pick_linear(&self, state: &State, direct: bool) -> Option<(Poly, ParamName, Poly, Poly)> {
        let mut best: Option<((u32, usize), (Poly, ParamName, Poly, Poly))> = None;
        for e in &state.eqs {
            for u in e.vars() {
                let Some((a, b)) = linear_in(e, u) else { continue };
                let known = factor_poly(&a)
                    .distinct()
                    .iter()
                    .all(|f| state.is_known_nonzero(f));
                if direct {
                    if known {
                        return Some((e.clone(), u, a, b));
                    }
                    continue;
                }
                let key = (a.total_degree(), a.term_count());
                if best.as_ref().is_none_or(|(k, _)| key <= *k) {
                    best = Some((key, (e.clone(), u, a, b)));
                }
            }
        }
        best.map(|(_, v)| v)
    }

    fn emit(&mut self, state: State, depth: usize) {
        let free: Vec<ParamName> = self
            .unknowns
            .iter()
            .copied()
            .filter(|u| !state.subs.contains_key(u))
            .collect();
        let mut side = state.nonzero;
        side.sort_by_key(eq_key);
        let sol = BranchSolution {
            substitutions: state.subs,
            side_conditions: side,
            provenance: state.path,
            free,
        };
        let dup = self
            .solutions
            .iter()
            .any(|s| s.substitutions == sol.substitutions && s.side_conditions == sol.side_conditions);
        if dup {
            self.line(depth, &format!("= duplicate: {}", sol.describe()));
        } else {
            self.line(depth, &format!("=> solution {}: {}", self.solutions.len() + 1, sol.describe()));
            self.solutions.push(sol);
        }
    }
}

pub fn branch_solve(sys: &PolySystem) -> Result<SolveOutcome> {
    let mut solver = Solver {
        solutions: Vec::new(),
        dead: 0,
        tree: String::new(),
        unknowns: sys.unknowns.clone(),
    };
    let state = State {
        subs: BTreeMap::new(),
        nonzero: Vec::new(),
        eqs: sys.equations.clone(),
        path: Vec::new(),
    };
    solver.run(state, 0)?;
    Ok(SolveOutcome {
        solutions: solver.solutions,
        dead_branches: solver.dead,
        case_tree: solver.tree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse::<RatFunc>().unwrap().num().clone()
    }

    #[test]
    fn quadratic_splits_into_roots() {
        let sys = PolySystem::new(vec![p("x^2 - 1")]);
        let out = branch_solve(&sys).unwrap();
        let vals: Vec<String> = out
            .solutions
            .iter()
            .map(|s| s.value(ParamName::X).to_string())
            .collect();
        assert_eq!(vals, ["-1", "1"]);
        assert!(out.sound_for(&sys));
    }

    #[test]
    fn stuck_is_an_error() {
        let sys = PolySystem::new(vec![p("x^2 - 2")]);
        assert!(matches!(branch_solve(&sys), Err(Error::SolverStuck(_))));
    }

    #[test]
    fn inconsistent_system_has_no_solutions() {
        let sys = PolySystem::new(vec![p("x - 1"), p("x + 1")]);
        let out = branch_solve(&sys).unwrap();
        assert!(out.solutions.is_empty());
        assert_eq!(out.dead_branches, 1);
    }

    #[test]
    fn nonconstant_coefficient_branches() {
        // b*c = 1 - a^2 with b possibly zero.
        let sys = PolySystem::new(vec![p("a^2 + b*c - 1")]);
        let out = branch_solve(&sys).unwrap();
        assert!(out.sound_for(&sys));
        assert!(out.solutions.iter().any(|s| s.side_conditions.contains(&p("b"))));
        assert!(out.solutions.iter().any(|s| s.value(ParamName::B).is_identically_zero()));
    }
}
