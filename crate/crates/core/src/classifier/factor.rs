//! Partial factorization over the rationals: monomial content, contents with
//! respect to single variables, rational roots of univariate factors, and
//! trial division by `u ± v`, `u ± 1`. Enough for the involution and
//! homogeneity systems, whose factors are all of this kind; anything else is
//! left as one (possibly reducible) factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::scalar::{poly_gcd, ParamName, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    /// Normalized, pairwise distinct factors with multiplicities, sorted.
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn distinct(&self) -> Vec<Poly> {
        self.factors.iter().map(|(f, _)| f.clone()).collect()
    }
}

pub fn factor_poly(p: &Poly) -> Factorization {
    if p.is_zero() {
        return Factorization {
            unit: Rational::zero(),
            factors: Vec::new(),
        };
    }
    let (unit, prim) = p.integer_primitive();
    let mc = prim.monomial_content();
    let mut raw: Vec<Poly> = Vec::new();
    for &(v, e) in mc.factors() {
        for _ in 0..e {
            raw.push(Poly::var(v));
        }
    }
    let rest = prim
        .div_exact(&Poly::monomial(mc, Rational::one()))
        .expect("monomial content divides");
    split(&rest.normalized(), &mut raw);
    // Normalizing each factor may flip signs; fold that into the unit.
    let mut unit = unit;
    let mut grouped: Vec<(Poly, u32)> = Vec::new();
    for f in raw {
        let (k, g) = f.integer_primitive();
        unit = &unit * &k;
        match grouped.iter_mut().find(|(h, _)| *h == g) {
            Some((_, m)) => *m += 1,
            None => grouped.push((g, 1)),
        }
    }
    grouped.sort_by_key(|a| a.0.cmp_key());
    Factorization {
        unit,
        factors: grouped,
    }
}

fn split(q: &Poly, out: &mut Vec<Poly>) {
    if q.is_constant() {
        return;
    }
    if q.total_degree() == 1 {
        out.push(q.clone());
        return;
    }
    let vars: Vec<ParamName> = q.vars().into_iter().collect();
    for &u in &vars {
        let coeffs = q.coefficients_in(u);
        let mut c = Poly::zero();
        for k in coeffs.iter().filter(|k| !k.is_zero()) {
            c = poly_gcd(&c, k);
            if c.is_constant() {
                break;
            }
        }
        if !c.is_constant() {
            let rest = q.div_exact(&c).expect("content divides");
            split(&c, out);
            split(&rest.normalized(), out);
            return;
        }
    }
    if vars.len() == 1 {
        if let Some(lin) = rational_root_factor(q, vars[0]) {
            let rest = q.div_exact(&lin).expect("root factor divides");
            out.push(lin);
            split(&rest.normalized(), out);
            return;
        }
    }
    let mut candidates = Vec::new();
    for (i, &u) in vars.iter().enumerate() {
        for &v in &vars[i + 1..] {
            candidates.push(&Poly::var(u) - &Poly::var(v));
            candidates.push(&Poly::var(u) + &Poly::var(v));
        }
        candidates.push(&Poly::var(u) - &Poly::one());
        candidates.push(&Poly::var(u) + &Poly::one());
    }
    for cand in candidates {
        if let Some(rest) = q.div_exact(&cand) {
            out.push(cand);
            split(&rest.normalized(), out);
            return;
        }
    }
    out.push(q.clone());
}

fn divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_i64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// A factor `q·u − p` for a rational root `p/q` of the univariate `f(u)`.
fn rational_root_factor(f: &Poly, u: ParamName) -> Option<Poly> {
    let coeffs: Vec<BigInt> = f
        .coefficients_in(u)
        .iter()
        .map(|c| {
            let v = c.constant_value().unwrap_or_else(Rational::zero);
            debug_assert!(v.is_integer());
            v.numer().clone()
        })
        .collect();
    let lead = coeffs.last()?.clone();
    let tail = coeffs.iter().find(|c| !c.is_zero())?.clone();
    let ps = divisors(&tail)?;
    let qs = divisors(&lead)?;
    for &q in &qs {
        for &p in &ps {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sp in [p, -p] {
                let r = Rational::new(sp, q).expect("nonzero divisor");
                let val = f
                    .eval::<Rational>(&|_| Some(r.clone()), &())
                    .expect("univariate");
                if val.is_zero() {
                    let lin = &Poly::var(u).scale(&Rational::integer(q)) - &Poly::integer(sp);
                    return Some(lin.normalized());
                }
            }
        }
    }
    None
}

trait CmpKey {
    fn cmp_key(&self) -> (u32, String);
}

impl CmpKey for Poly {
    fn cmp_key(&self) -> (u32, String) {
        (self.total_degree(), self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        let r: crate::scalar::RatFunc = s.parse().unwrap();
        r.num().clone()
    }

    fn shown(f: &Factorization) -> Vec<String> {
        f.factors.iter().map(|(g, m)| format!("{g}^{m}")).collect()
    }

    #[test]
    fn difference_of_squares() {
        let f = factor_poly(&p("x^2 - 1"));
        assert_eq!(shown(&f), ["x + 1^1", "x - 1^1"]);
    }

    #[test]
    fn monomial_and_linear() {
        let f = factor_poly(&p("x*t*(x - t)"));
        assert_eq!(f.factors.len(), 3);
        let f = factor_poly(&p("-2*a*b - 2*b*d"));
        assert_eq!(f.unit, Rational::integer(-2));
        assert_eq!(f.distinct(), vec![p("a + d"), p("b")]);
    }

    #[test]
    fn repeated_and_rational_roots() {
        let f = factor_poly(&p("(2*x - 1)^2*(x + 3)"));
        assert_eq!(f.factors.iter().map(|(_, m)| m).sum::<u32>(), 3);
        assert!(f.factors.contains(&(p("2*x - 1"), 2)));
    }

    #[test]
    fn irreducible_left_alone() {
        let f = factor_poly(&p("a^2 + b*c - 1"));
        assert_eq!(f.distinct(), vec![p("a^2 + b*c - 1")]);
        let f = factor_poly(&p("x^2 + 1"));
        assert_eq!(f.factors.len(), 1);
    }

    #[test]
    fn product_reconstructs() {
        for s in ["a*(a - 1 + b*c)", "x*t*(x - t)", "6*y^2 - 6", "(a - d)*(b + c)*d^2"] {
            let q = p(s);
            let f = factor_poly(&q);
            let mut prod = Poly::constant(f.unit.clone());
            for (g, m) in &f.factors {
                prod = &prod * &g.pow(*m);
            }
            assert_eq!(prod, q, "{s}");
        }
    }
}
