use std::fmt;

use super::rational::Rational;
use super::Scalar;
use crate::error::{Error, Result};

/// Element of the prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpElem {
    value: u64,
    modulus: u64,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FpElem {
    /// Moduli must be prime and below 2^32 so products fit in `u64`.
    pub fn new(value: i64, modulus: u64) -> Result<FpElem> {
        if !is_prime(modulus) || modulus >= 1 << 32 {
            return Err(Error::NotPrime(modulus));
        }
        Ok(FpElem::reduce(value, modulus))
    }

    pub(crate) fn reduce(value: i64, modulus: u64) -> FpElem {
        let m = modulus as i64;
        FpElem {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }

    fn pow_mod(self, mut e: u64) -> FpElem {
        let mut base = self.value;
        let mut acc = 1 % self.modulus;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            e >>= 1;
        }
        FpElem {
            value: acc,
            modulus: self.modulus,
        }
    }
}

impl Scalar for FpElem {
    type Ctx = u64;

    fn zero(p: &u64) -> Self {
        FpElem { value: 0, modulus: *p }
    }
    fn one(p: &u64) -> Self {
        FpElem {
            value: 1 % *p,
            modulus: *p,
        }
    }
    fn ctx(&self) -> u64 {
        self.modulus
    }
    fn from_rational(r: &Rational, p: &u64) -> Option<Self> {
        let reduce = |b: &num_bigint::BigInt| {
            let m = num_bigint::BigInt::from(*p);
            let v = ((b % &m) + &m) % &m;
            u64::try_from(v).expect("reduced below modulus")
        };
        let n = FpElem {
            value: reduce(r.numer()),
            modulus: *p,
        };
        let d = FpElem {
            value: reduce(r.denom()),
            modulus: *p,
        };
        Some(n.times(&d.inverse()?))
    }
    fn plus(&self, rhs: &Self) -> Self {
        FpElem {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        FpElem {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        FpElem {
            value: self.value * rhs.value % self.modulus,
            modulus: self.modulus,
        }
    }
    fn negated(&self) -> Self {
        FpElem {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow_mod(self.modulus - 2))
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1 % self.modulus
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(mod {})", self.value, self.modulus)
    }
}
