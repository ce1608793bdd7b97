//! Exact scalar arithmetic: rationals, multivariate polynomials and rational
//! functions in named parameters, and prime-field elements.

mod binding;
mod enumerate;
mod fp;
mod gcd;
mod param;
mod parse;
mod poly;
mod ratfunc;
mod rational;

use std::fmt;
use std::hash::Hash;

pub use binding::ParamBinding;
pub use enumerate::{fp_enumerate, FpTuples, ENUMERATION_GUARD};
pub use fp::{is_prime, FpElem};
pub use gcd::poly_gcd;
pub use param::ParamName;
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;
pub use rational::Rational;

/// A field element usable as a matrix entry.
///
/// `Ctx` carries whatever the field needs to build constants (the modulus for
/// prime fields, nothing for the rationals).
pub trait Scalar:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    type Ctx: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn ctx(&self) -> Self::Ctx;
    /// Image of a rational under the canonical map; `None` if its
    /// denominator is not invertible in this field.
    fn from_rational(r: &Rational, ctx: &Self::Ctx) -> Option<Self>;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn from_int(v: i64, ctx: &Self::Ctx) -> Self {
        Self::from_rational(&Rational::integer(v), ctx).expect("integers embed in every field")
    }

    fn power(&self, exp: u32) -> Self {
        let mut acc = Self::one(&self.ctx());
        for _ in 0..exp {
            acc = acc.times(self);
        }
        acc
    }
}

impl Scalar for Rational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Rational::zero()
    }
    fn one(_: &()) -> Self {
        Rational::one()
    }
    fn ctx(&self) {}
    fn from_rational(r: &Rational, _: &()) -> Option<Self> {
        Some(r.clone())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn power(&self, exp: u32) -> Self {
        self.pow(exp)
    }
}
