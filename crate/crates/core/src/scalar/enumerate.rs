use super::fp::{is_prime, FpElem};
use crate::error::{Error, Result};

/// Largest enumeration `fp_enumerate` accepts.
pub const ENUMERATION_GUARD: u128 = 100_000_000;

/// All `p^arity` tuples over `F_p`, in lexicographic order with the last
/// coordinate varying fastest.
pub fn fp_enumerate(p: u64, arity: usize) -> Result<FpTuples> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let total = (p as u128)
        .checked_pow(arity as u32)
        .unwrap_or(u128::MAX);
    if total > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded(total, ENUMERATION_GUARD));
    }
    Ok(FpTuples {
        p,
        current: vec![0; arity],
        remaining: total,
    })
}

#[derive(Debug, Clone)]
pub struct FpTuples {
    p: u64,
    current: Vec<u64>,
    remaining: u128,
}

impl FpTuples {
    pub fn total(&self) -> u128 {
        self.remaining
    }
}

impl Iterator for FpTuples {
    type Item = Vec<FpElem>;

    fn next(&mut self) -> Option<Vec<FpElem>> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self
            .current
            .iter()
            .map(|&v| FpElem::reduce(v as i64, self.p))
            .collect();
        for slot in self.current.iter_mut().rev() {
            *slot += 1;
            if *slot < self.p {
                break;
            }
            *slot = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let vals: Vec<u64> = fp_enumerate(3, 1).unwrap().map(|t| t[0].value()).collect();
        assert_eq!(vals, vec![0, 1, 2]);
        assert_eq!(fp_enumerate(2, 4).unwrap().count(), 16);
        let all: HashSet<Vec<FpElem>> = fp_enumerate(3, 4).unwrap().collect();
        assert_eq!(all.len(), 81);
    }

    #[test]
    fn zero_arity_yields_empty_tuple() {
        assert_eq!(fp_enumerate(5, 0).unwrap().collect::<Vec<_>>(), vec![vec![]]);
    }

    #[test]
    fn guard() {
        assert!(matches!(fp_enumerate(7, 10), Err(Error::GuardExceeded(..))));
        assert!(matches!(fp_enumerate(4, 2), Err(Error::NotPrime(4))));
    }
}
