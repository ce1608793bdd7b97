//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive primitive pseudo-remainder sequences: pick a main variable, split
//! off the content (a gcd in one fewer variable), and run Euclid on the
//! primitive parts with pseudo-division. The inputs here are small, so no
//! modular or sparse interpolation machinery is needed.

use super::param::ParamName;
use super::poly::Poly;

/// Greatest common divisor, normalized to coprime integer coefficients with
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.normalized();
    }
    if g.is_zero() {
        return f.normalized();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one();
    }
    let mc = f.monomial_content().gcd(&g.monomial_content());
    let mono = Poly::monomial(mc.clone(), super::Rational::one());
    let f = f.div_exact(&mono).expect("monomial content divides");
    let g = g.div_exact(&mono).expect("monomial content divides");
    let core = gcd_rec(&f, &g);
    (&core * &mono).normalized()
}

fn main_var(f: &Poly, g: &Poly) -> Option<ParamName> {
    let fv = f.vars();
    let gv = g.vars();
    fv.intersection(&gv).last().copied()
}

fn gcd_rec(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.normalized();
    }
    if g.is_zero() {
        return f.normalized();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one();
    }
    if f == g {
        return f.normalized();
    }
    let v = match main_var(f, g) {
        Some(v) => v,
        None => {
            // No shared variable: the gcd is the gcd of the contents with
            // respect to any variable of either side.
            let v = *f.vars().iter().next_back().expect("non-constant");
            return gcd_rec(&content(f, v), g);
        }
    };
    // A variable present in only one side forces the gcd into that side's
    // content with respect to it.
    for p in f.vars() {
        if !g.contains_var(p) {
            return gcd_rec(&content(f, p), g);
        }
    }
    for p in g.vars() {
        if !f.contains_var(p) {
            return gcd_rec(f, &content(g, p));
        }
    }
    let cf = content(f, v);
    let cg = content(g, v);
    let c = gcd_rec(&cf, &cg);
    let mut a = f.div_exact(&cf).expect("content divides");
    let mut b = g.div_exact(&cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() && b.degree_in(v) > 0 {
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { primitive(&r, v) };
    }
    let g = if b.is_zero() {
        primitive(&a, v)
    } else {
        // Remainder dropped to degree zero in `v`: primitive parts coprime.
        Poly::one()
    };
    (&c * &g).normalized()
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `v`.
fn content(f: &Poly, v: ParamName) -> Poly {
    let coeffs = f.coefficients_in(v);
    let mut acc = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        acc = if acc.is_zero() {
            c.normalized()
        } else {
            gcd_rec(&acc, c)
        };
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive(f: &Poly, v: ParamName) -> Poly {
    let c = content(f, v);
    f.div_exact(&c).expect("content divides").normalized()
}

/// Pseudo-remainder of `a` by `b` in the variable `v`.
fn pseudo_rem(a: &Poly, b: &Poly, v: ParamName) -> Poly {
    let db = b.degree_in(v);
    let bc = b.coefficients_in(v);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coefficients_in(v)[dr as usize].clone();
        let shift = Poly::monomial(super::Monomial::var(v, dr - db), super::Rational::one());
        r = &(&r * &lb) - &(&(&lr * &shift) * b);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use ParamName as P;

    fn v(p: ParamName) -> Poly {
        Poly::var(p)
    }

    #[test]
    fn difference_of_squares() {
        let a = v(P::A);
        let d = v(P::D);
        let f = &(&a * &a) - &(&d * &d);
        let g = &(&a * &v(P::B)) + &(&d * &v(P::B));
        assert_eq!(poly_gcd(&f, &g), &a + &d);
    }

    #[test]
    fn coprime_inputs() {
        let f = &v(P::A) + &Poly::one();
        let g = &v(P::A) - &Poly::one();
        assert!(poly_gcd(&f, &g).is_one());
    }

    #[test]
    fn shared_monomial_and_scalar() {
        let b = v(P::B);
        let f = (&b * &(&Poly::one() - &(&v(P::D) * &v(P::D)))).scale(&Rational::integer(6));
        let g = (&b * &b).scale(&Rational::new(3, 2).unwrap());
        assert_eq!(poly_gcd(&f, &g), b);
    }

    #[test]
    fn multivariate_common_factor() {
        let x = v(P::X);
        let y = v(P::Y);
        let t = v(P::T);
        let common = &(&x * &y) - &t;
        let f = &common * &(&x + &t);
        let g = &common * &(&(&y * &y) + &Poly::integer(2));
        assert_eq!(poly_gcd(&f, &g), common.normalized());
    }

    #[test]
    fn gcd_with_zero() {
        let f = (&v(P::C) - &Poly::integer(2)).scale(&Rational::integer(-4));
        assert_eq!(poly_gcd(&f, &Poly::zero()), &v(P::C) - &Poly::integer(2));
    }
}
