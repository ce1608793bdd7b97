use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::poly_gcd;
use super::param::ParamName;
use super::poly::Poly;
use super::rational::Rational;
use super::{ParamBinding, Scalar};
use crate::error::{Error, Result};

/// Rational function `num / den` over the rationals.
///
/// Canonical form: `gcd(num, den) = 1` and `den` has coprime integer
/// coefficients with a positive leading coefficient, so structural equality
/// is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let (k, den) = den.integer_primitive();
        let num = num.scale(&k.recip().expect("nonzero denominator content"));
        RatFunc { num, den }
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn integer(v: i64) -> RatFunc {
        RatFunc::from_poly(Poly::integer(v))
    }

    pub fn var(p: ParamName) -> RatFunc {
        RatFunc::from_poly(Poly::var(p))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_identically_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn vars(&self) -> BTreeSet<ParamName> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::canonical(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        if rhs.den.is_one() {
            return RatFunc {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::canonical(num, &self.den * &rhs.den)
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel before multiplying so intermediate sizes stay small.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let (k, den) = (&d1 * &d2).integer_primitive();
        RatFunc {
            num: (&n1 * &n2).scale(&k.recip().expect("nonzero")),
            den,
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Value at a rational binding. Errors if a parameter is unbound or the
    /// denominator vanishes.
    pub fn specialize(&self, binding: &ParamBinding) -> Result<Rational> {
        self.eval_in::<Rational>(&|p| binding.get(p).cloned(), &())
    }

    /// Evaluates into any field.
    pub fn eval_in<F: Scalar>(
        &self,
        assign: &dyn Fn(ParamName) -> Option<F>,
        ctx: &F::Ctx,
    ) -> Result<F> {
        let n = self.num.eval(assign, ctx)?;
        let d = self.den.eval(assign, ctx)?;
        let dinv = d.inverse().ok_or(Error::DenominatorVanishes)?;
        Ok(n.times(&dinv))
    }

    /// Replaces parameters by rational functions; unmapped parameters stay.
    pub fn substitute(&self, map: &dyn Fn(ParamName) -> Option<RatFunc>) -> Result<RatFunc> {
        let assign = |p: ParamName| Some(map(p).unwrap_or_else(|| RatFunc::var(p)));
        self.eval_in::<RatFunc>(&assign, &())
    }
}

impl Scalar for RatFunc {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        RatFunc::zero()
    }
    fn one(_: &()) -> Self {
        RatFunc::one()
    }
    fn ctx(&self) {}
    fn from_rational(r: &Rational, _: &()) -> Option<Self> {
        Some(RatFunc::constant(r.clone()))
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
    fn power(&self, exp: u32) -> Self {
        self.pow(exp)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(r: Rational) -> Self {
        RatFunc::constant(r)
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        RatFunc::integer(v)
    }
}

fn needs_parens(p: &Poly) -> bool {
    p.term_count() > 1
}

fn den_needs_parens(p: &Poly) -> bool {
    p.term_count() > 1
        || p.terms()
            .next()
            .map(|(m, c)| m.factors().len() > 1 || !c.is_one())
            .unwrap_or(false)
}

impl fmt::Display for RatFunc {
    /// Canonical text: `num` or `(num)/(den)`, parentheses dropped around
    /// single bare factors. The output parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if den_needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_ratfunc(s)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_by_denominator() {
        // ((1-d^2)/b) * b = 1 - d^2
        let e = rf("(1-d^2)/b").mul(&rf("b"));
        assert_eq!(e, rf("1-d^2"));
        assert!(e.is_polynomial());
    }

    #[test]
    fn self_difference_is_zero() {
        let e = rf("b/(1+d)");
        assert!(e.sub(&e).is_identically_zero());
    }

    #[test]
    fn involution_entry_identity() {
        // ((1-t^2)/y) * y + t^2 = 1
        let e = rf("(1-t^2)/y").mul(&rf("y")).add(&rf("t^2"));
        assert_eq!(e, RatFunc::one());
    }

    #[test]
    fn zero_detection() {
        assert!(rf("(a+d)*b - a*b - d*b").is_identically_zero());
        assert!(!rf("a^2 + b*c - 1").is_identically_zero());
        assert!(rf("((1-d^2) - (1-d)*(1+d))/b").is_identically_zero());
    }

    #[test]
    fn division_by_zero_function() {
        assert_eq!(rf("b").div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert!("1/(b-b)".parse::<RatFunc>().is_err());
    }

    #[test]
    fn specialize_examples() {
        let e = rf("(1-d^2)/b");
        let bind = ParamBinding::parse("d=3,b=2").unwrap();
        assert_eq!(e.specialize(&bind).unwrap(), Rational::integer(-4));
        let e = rf("(1-t^2)/y");
        let bind = ParamBinding::parse("t=1,y=5").unwrap();
        assert_eq!(e.specialize(&bind).unwrap(), Rational::zero());
        let e = rf("(1-d^2)/b");
        let bind = ParamBinding::parse("d=1,b=0").unwrap();
        assert_eq!(e.specialize(&bind), Err(Error::DenominatorVanishes));
    }

    #[test]
    fn missing_parameter() {
        let bind = ParamBinding::parse("d=3").unwrap();
        assert_eq!(
            rf("(1-d^2)/b").specialize(&bind),
            Err(Error::MissingParameter("b".into()))
        );
    }

    #[test]
    fn canonical_denominator_sign() {
        let e = rf("1/(-2*b)");
        assert_eq!(e.den(), &Poly::var(ParamName::B));
        assert_eq!(e.to_string(), "-1/2/b");
        assert_eq!(rf(&e.to_string()), e);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["(1-d^2)/b", "b/(1+d)", "-t", "3/2*a*b - c", "1/(x*y)", "0"] {
            let e = rf(s);
            assert_eq!(rf(&e.to_string()), e, "{s} -> {e}");
        }
    }

    #[test]
    fn substitute_composes() {
        let e = rf("a^2 + b*c - 1");
        let s = e
            .substitute(&|p| match p {
                ParamName::A => Some(rf("-d")),
                ParamName::C => Some(rf("(1-d^2)/b")),
                _ => None,
            })
            .unwrap();
        assert!(s.is_identically_zero());
    }
}
