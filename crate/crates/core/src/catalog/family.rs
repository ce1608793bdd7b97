use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::braid::GroupKind;
use crate::error::{Error, Result};
use crate::linalg::{ratfunc_matrix, Matrix};
use crate::scalar::{ParamName, RatFunc};

/// Named representation families. Tags are ASCII (`l1`, `g2`, `d5`, `b3`,
/// `burau`, `frep`) so they work as CLI arguments and JSON keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Lambda(u8),
    Gamma(u8),
    Delta(u8),
    Burau,
    FRep,
    Beta(u8),
    Custom,
}

impl FamilyId {
    pub fn lambdas() -> Vec<FamilyId> {
        (1..=12).map(FamilyId::Lambda).collect()
    }

    pub fn gammas() -> Vec<FamilyId> {
        vec![FamilyId::Gamma(1), FamilyId::Gamma(2)]
    }

    pub fn deltas() -> Vec<FamilyId> {
        (1..=8).map(FamilyId::Delta).collect()
    }

    pub fn braid_references() -> Vec<FamilyId> {
        vec![
            FamilyId::Burau,
            FamilyId::FRep,
            FamilyId::Beta(1),
            FamilyId::Beta(2),
            FamilyId::Beta(3),
        ]
    }

    /// Every built-in family (everything except `Custom`).
    pub fn all() -> Vec<FamilyId> {
        let mut v = FamilyId::lambdas();
        v.extend(FamilyId::gammas());
        v.extend(FamilyId::deltas());
        v.extend(FamilyId::braid_references());
        v
    }

    pub fn tag(self) -> String {
        match self {
            FamilyId::Lambda(i) => format!("l{i}"),
            FamilyId::Gamma(i) => format!("g{i}"),
            FamilyId::Delta(i) => format!("d{i}"),
            FamilyId::Burau => "burau".into(),
            FamilyId::FRep => "frep".into(),
            FamilyId::Beta(i) => format!("b{i}"),
            FamilyId::Custom => "custom".into(),
        }
    }

    pub fn pretty(self) -> String {
        match self {
            FamilyId::Lambda(i) => format!("λ{i}"),
            FamilyId::Gamma(i) => format!("γ{i}"),
            FamilyId::Delta(i) => format!("δ{i}"),
            FamilyId::Burau => "Burau".into(),
            FamilyId::FRep => "F-rep".into(),
            FamilyId::Beta(i) => format!("β{i}"),
            FamilyId::Custom => "custom".into(),
        }
    }

    pub fn group_kind(self) -> GroupKind {
        match self {
            FamilyId::Burau | FamilyId::FRep | FamilyId::Beta(_) => GroupKind::Braid,
            _ => GroupKind::FlatVirtual,
        }
    }

    pub fn block_size(self) -> usize {
        match self {
            FamilyId::Delta(_) | FamilyId::FRep => 3,
            _ => 2,
        }
    }

    /// Ambient dimension at `n` strands: `n` for 2×2 blocks, `n+1` for 3×3.
    pub fn ambient_dim(self, n: usize) -> usize {
        n + self.block_size() - 2
    }

    /// Strand counts the family may be instantiated at.
    pub fn check_n(self, n: usize) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::InvalidStrandCount {
                n,
                reason: format!("{}: {reason}", self.tag()),
            })
        };
        match self {
            FamilyId::Lambda(_) if n != 2 => bad("λ families live on two strands"),
            _ if n < 2 => bad("at least two strands are required"),
            _ => Ok(()),
        }
    }

    pub fn spec(self) -> Result<BlockSpec> {
        builtin_spec(self)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyId> {
        let t = s.trim().to_lowercase();
        let unknown = || Error::UnknownFamily(s.to_string());
        let indexed = |rest: &str, max: u8, mk: fn(u8) -> FamilyId| -> Result<FamilyId> {
            let i: u8 = rest.parse().map_err(|_| unknown())?;
            if (1..=max).contains(&i) {
                Ok(mk(i))
            } else {
                Err(unknown())
            }
        };
        match t.as_str() {
            "burau" => return Ok(FamilyId::Burau),
            "frep" | "f-rep" | "f" => return Ok(FamilyId::FRep),
            "custom" => return Ok(FamilyId::Custom),
            _ => {}
        }
        for (prefix, max, mk) in [
            ("lambda", 12, FamilyId::Lambda as fn(u8) -> FamilyId),
            ("gamma", 2, FamilyId::Gamma),
            ("delta", 8, FamilyId::Delta),
            ("beta", 3, FamilyId::Beta),
            ("λ", 12, FamilyId::Lambda),
            ("γ", 2, FamilyId::Gamma),
            ("δ", 8, FamilyId::Delta),
            ("β", 3, FamilyId::Beta),
            ("l", 12, FamilyId::Lambda),
            ("g", 2, FamilyId::Gamma),
            ("d", 8, FamilyId::Delta),
            ("b", 3, FamilyId::Beta),
        ] {
            if let Some(rest) = t.strip_prefix(prefix) {
                return indexed(rest, max, mk);
            }
        }
        Err(unknown())
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.tag())
    }
}

/// The generating blocks of a homogeneous local representation, plus the
/// parameter expressions that must not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub family: FamilyId,
    pub sigma: Matrix<RatFunc>,
    /// Absent for braid-group families.
    pub rho: Option<Matrix<RatFunc>>,
    pub constraints: Vec<RatFunc>,
}

impl BlockSpec {
    pub fn new(
        family: FamilyId,
        sigma: Matrix<RatFunc>,
        rho: Option<Matrix<RatFunc>>,
        constraints: Vec<RatFunc>,
    ) -> Result<BlockSpec> {
        if let Some(r) = &rho {
            if r.dim() != sigma.dim() {
                return Err(Error::DimensionMismatch(r.dim(), sigma.dim()));
            }
        }
        if !(2..=3).contains(&sigma.dim()) {
            return Err(Error::DimensionMismatch(sigma.dim(), 2));
        }
        Ok(BlockSpec {
            family,
            sigma,
            rho,
            constraints,
        })
    }

    pub fn block_size(&self) -> usize {
        self.sigma.dim()
    }

    /// Free parameters, in alphabet order.
    pub fn params(&self) -> Vec<ParamName> {
        let mut set = BTreeSet::new();
        for m in std::iter::once(&self.sigma).chain(self.rho.as_ref()) {
            for e in m.entries() {
                set.extend(e.vars());
            }
        }
        for c in &self.constraints {
            set.extend(c.vars());
        }
        set.into_iter().collect()
    }
}

const I2: [&[&str]; 2] = [&["1", "0"], &["0", "1"]];
const I3: [&[&str]; 3] = [&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]];

// The three involution shapes for each alphabet, as printed.
const SIGMA_GEN: [&[&str]; 2] = [&["-d", "b"], &["(1-d^2)/b", "d"]];
const RHO_GEN: [&[&str]; 2] = [&["-t", "y"], &["(1-t^2)/y", "t"]];
const SIGMA_TRI: [&[&str]; 2] = [&["1", "0"], &["c", "-1"]];
const RHO_TRI: [&[&str]; 2] = [&["1", "0"], &["z", "-1"]];

fn builtin_spec(id: FamilyId) -> Result<BlockSpec> {
    let m = |rows: &[&[&str]]| ratfunc_matrix(rows);
    let cons = |names: &[&str]| -> Result<Vec<RatFunc>> { names.iter().map(|s| s.parse()).collect() };
    let (sigma, rho, constraints): (Matrix<RatFunc>, Option<Matrix<RatFunc>>, Vec<RatFunc>) = match id {
        FamilyId::Lambda(1) => (m(&SIGMA_GEN)?, Some(m(&RHO_GEN)?), cons(&["b", "y"])?),
        FamilyId::Lambda(2) => (m(&SIGMA_TRI)?, Some(m(&RHO_GEN)?), cons(&["y"])?),
        FamilyId::Lambda(3) => (m(&I2)?, Some(m(&RHO_GEN)?), cons(&["y"])?),
        FamilyId::Lambda(4) => (m(&SIGMA_GEN)?, Some(m(&RHO_TRI)?), cons(&["b"])?),
        FamilyId::Lambda(5) => (m(&SIGMA_GEN)?, Some(m(&I2)?), cons(&["b"])?),
        FamilyId::Lambda(6) => (m(&SIGMA_TRI)?, Some(m(&RHO_TRI)?), vec![]),
        FamilyId::Lambda(7) => (m(&SIGMA_TRI)?, Some(m(&[&["-1", "0"], &["z", "1"]])?), vec![]),
        FamilyId::Lambda(8) => (m(&I2)?, Some(m(&RHO_TRI)?), vec![]),
        FamilyId::Lambda(9) => (m(&SIGMA_TRI)?, Some(m(&I2)?), vec![]),
        FamilyId::Lambda(10) => (m(&I2)?, Some(m(&[&["-1", "0"], &["0", "-1"]])?), vec![]),
        FamilyId::Lambda(11) => (m(&I2)?, Some(m(&[&["-1", "0"], &["z", "1"]])?), vec![]),
        FamilyId::Lambda(12) => (m(&[&["-1", "0"], &["c", "1"]])?, Some(m(&I2)?), vec![]),
        FamilyId::Gamma(1) => (m(&I2)?, Some(m(&[&["0", "y"], &["1/y", "0"]])?), cons(&["y"])?),
        FamilyId::Gamma(2) => (
            m(&[&["0", "b"], &["1/b", "0"]])?,
            Some(m(&[&["0", "y"], &["1/y", "0"]])?),
            cons(&["b", "y"])?,
        ),
        FamilyId::Delta(1) => (
            m(&I3)?,
            Some(m(&[&["1", "x", "0"], &["0", "-1", "0"], &["0", "1/x", "1"]])?),
            cons(&["x"])?,
        ),
        FamilyId::Delta(2) => (
            m(&I3)?,
            Some(m(&[&["1", "0", "0"], &["1/x", "-1", "x"], &["0", "0", "1"]])?),
            cons(&["x"])?,
        ),
        FamilyId::Delta(3) => (
            m(&I3)?,
            Some(m(&[&["0", "x", "0"], &["1/x", "0", "0"], &["0", "0", "1"]])?),
            cons(&["x"])?,
        ),
        FamilyId::Delta(4) => (
            m(&I3)?,
            Some(m(&[&["1", "0", "0"], &["0", "0", "x"], &["0", "1/x", "0"]])?),
            cons(&["x"])?,
        ),
        // Third row of the ρ block is (0, 1, 1) exactly as printed.
        FamilyId::Delta(5) => (
            m(&[&["0", "1/x", "0"], &["x", "0", "0"], &["0", "0", "1"]])?,
            Some(m(&[&["0", "y", "0"], &["1/y", "0", "0"], &["0", "1", "1"]])?),
            cons(&["x", "y"])?,
        ),
        FamilyId::Delta(6) => (
            m(&[&["1", "0", "0"], &["0", "0", "1/x"], &["0", "x", "0"]])?,
            Some(m(&[&["1", "0", "0"], &["0", "0", "y"], &["0", "1/y", "0"]])?),
            cons(&["x", "y"])?,
        ),
        // ρ block third row (0, 1/x, 0) as printed; the block is singular.
        FamilyId::Delta(7) => (
            m(&[&["1", "x", "0"], &["0", "-1", "0"], &["0", "1/x", "1"]])?,
            Some(m(&[&["1", "x", "0"], &["0", "-1", "0"], &["0", "1/x", "0"]])?),
            cons(&["x"])?,
        ),
        FamilyId::Delta(8) => (
            m(&[&["1", "0", "0"], &["1/x", "-1", "x"], &["0", "0", "1"]])?,
            Some(m(&[&["1", "0", "0"], &["1/x", "-1", "x"], &["0", "0", "1"]])?),
            cons(&["x"])?,
        ),
        FamilyId::Burau => (m(&[&["1-t", "t"], &["1", "0"]])?, None, cons(&["t"])?),
        FamilyId::FRep => (
            m(&[&["1", "1", "0"], &["0", "-t", "0"], &["0", "t", "1"]])?,
            None,
            cons(&["t"])?,
        ),
        FamilyId::Beta(1) => (m(&[&["a", "(1-a)/c"], &["c", "0"]])?, None, cons(&["c", "a-1"])?),
        FamilyId::Beta(2) => (m(&[&["0", "(1-d)/c"], &["c", "d"]])?, None, cons(&["c", "d-1"])?),
        FamilyId::Beta(3) => (m(&[&["0", "b"], &["c", "0"]])?, None, cons(&["b", "c"])?),
        other => return Err(Error::UnknownFamily(other.tag())),
    };
    BlockSpec::new(id, sigma, rho, constraints)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_roundtrip() {
        for f in FamilyId::all() {
            assert_eq!(f.tag().parse::<FamilyId>().unwrap(), f);
            assert_eq!(f.pretty().parse::<FamilyId>().unwrap(), f);
        }
        assert!("l13".parse::<FamilyId>().is_err());
        assert!("g0".parse::<FamilyId>().is_err());
        assert!("zeta".parse::<FamilyId>().is_err());
    }

    #[test]
    fn every_builtin_has_a_spec() {
        for f in FamilyId::all() {
            let s = f.spec().unwrap();
            assert_eq!(s.block_size(), f.block_size());
            assert_eq!(s.rho.is_some(), f.group_kind().has_rho());
        }
        assert!(FamilyId::Custom.spec().is_err());
    }

    #[test]
    fn params_and_constraints() {
        let names = |f: FamilyId| -> Vec<String> {
            f.spec().unwrap().params().iter().map(|p| p.name()).collect()
        };
        assert_eq!(names(FamilyId::Lambda(1)), ["b", "d", "y", "t"]);
        assert_eq!(names(FamilyId::Lambda(10)), Vec::<String>::new());
        assert_eq!(names(FamilyId::Beta(1)), ["a", "c"]);
    }
}
