use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::param::ParamName;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Assignment of rational values to parameters.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "BTreeMap<String, Rational>", try_from = "BTreeMap<String, Rational>")]
pub struct ParamBinding {
    values: BTreeMap<ParamName, Rational>,
}

impl ParamBinding {
    pub fn new() -> ParamBinding {
        ParamBinding::default()
    }

    pub fn with(mut self, p: ParamName, v: impl Into<Rational>) -> ParamBinding {
        self.values.insert(p, v.into());
        self
    }

    pub fn set(&mut self, p: ParamName, v: Rational) {
        self.values.insert(p, v);
    }

    pub fn get(&self, p: ParamName) -> Option<&Rational> {
        self.values.get(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (ParamName, &Rational)> {
        self.values.iter().map(|(p, v)| (*p, v))
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Parses `b=2/1,y=3/1`.
    pub fn parse(s: &str) -> Result<ParamBinding> {
        let mut out = ParamBinding::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected `name=value`, got `{part}`")))?;
            out.set(k.parse()?, v.parse()?);
        }
        Ok(out)
    }
}

impl fmt::Display for ParamBinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for ParamBinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl From<ParamBinding> for BTreeMap<String, Rational> {
    fn from(b: ParamBinding) -> Self {
        b.values.into_iter().map(|(k, v)| (k.name(), v)).collect()
    }
}

impl TryFrom<BTreeMap<String, Rational>> for ParamBinding {
    type Error = Error;

    fn try_from(m: BTreeMap<String, Rational>) -> Result<Self> {
        let mut out = ParamBinding::new();
        for (k, v) in m {
            out.set(ParamName::new(&k)?, v);
        }
        Ok(out)
    }
}
