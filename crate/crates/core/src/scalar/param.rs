//! Parameter names used as polynomial variables.
//!
//! Names are interned process-wide. The eight letters of the standard
//! alphabet are registered first, in the order `a b c d x y z t`, which is
//! also the variable order used by the monomial ordering.

use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};

const ALPHABET: [&str; 8] = ["a", "b", "c", "d", "x", "y", "z", "t"];

static REGISTRY: Lazy<RwLock<Vec<String>>> =
    Lazy::new(|| RwLock::new(ALPHABET.iter().map(|s| s.to_string()).collect()));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamName(u16);

impl ParamName {
    pub const A: ParamName = ParamName(0);
    pub const B: ParamName = ParamName(1);
    pub const C: ParamName = ParamName(2);
    pub const D: ParamName = ParamName(3);
    pub const X: ParamName = ParamName(4);
    pub const Y: ParamName = ParamName(5);
    pub const Z: ParamName = ParamName(6);
    pub const T: ParamName = ParamName(7);

    /// The standard alphabet in variable order.
    pub fn alphabet() -> [ParamName; 8] {
        [
            Self::A,
            Self::B,
            Self::C,
            Self::D,
            Self::X,
            Self::Y,
            Self::Z,
            Self::T,
        ]
    }

    /// Looks up or registers `name`.
    pub fn new(name: &str) -> Result<ParamName> {
        if !is_identifier(name) {
            return Err(Error::Parse(format!("invalid parameter name `{name}`")));
        }
        if let Some(i) = REGISTRY.read().iter().position(|s| s == name) {
            return Ok(ParamName(i as u16));
        }
        let mut reg = REGISTRY.write();
        if let Some(i) = reg.iter().position(|s| s == name) {
            return Ok(ParamName(i as u16));
        }
        reg.push(name.to_string());
        Ok(ParamName((reg.len() - 1) as u16))
    }

    /// Registers a name not yet in use, derived from `base`.
    pub fn fresh(base: &str) -> ParamName {
        let mut reg = REGISTRY.write();
        let mut k = reg.len();
        loop {
            let candidate = format!("{base}_{k}");
            if !reg.contains(&candidate) {
                reg.push(candidate);
                return ParamName((reg.len() - 1) as u16);
            }
            k += 1;
        }
    }

    pub fn index(self) -> u16 {
        self.0
    }

    pub fn name(self) -> String {
        REGISTRY.read()[self.0 as usize].clone()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for ParamName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ParamName::new(s.trim())
    }
}

impl serde::Serialize for ParamName {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_is_preregistered() {
        assert_eq!(ParamName::new("a").unwrap(), ParamName::A);
        assert_eq!(ParamName::new("t").unwrap(), ParamName::T);
        assert_eq!(ParamName::Z.to_string(), "z");
    }

    #[test]
    fn fresh_names_are_distinct() {
        let u = ParamName::fresh("u");
        let v = ParamName::fresh("u");
        assert_ne!(u, v);
        assert_eq!(ParamName::new(&u.name()).unwrap(), u);
    }

    #[test]
    fn rejects_bad_identifiers() {
        assert!(ParamName::new("1x").is_err());
        assert!(ParamName::new("").is_err());
    }
}
