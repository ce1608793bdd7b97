use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Sigma,
    Rho,
}

/// `σ_i` or `ρ_i`, with 1-based index. Ordering puts every σ before every ρ,
/// which fixes the "lexicographic" tie-break used by enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn sigma(index: usize) -> Generator {
        Generator {
            kind: GenKind::Sigma,
            index,
        }
    }

    pub fn rho(index: usize) -> Generator {
        Generator {
            kind: GenKind::Rho,
            index,
        }
    }

    /// All generators of the `n`-strand group of the given kinds, σ's first.
    pub fn all(n: usize, with_rho: bool) -> Vec<Generator> {
        let mut out: Vec<Generator> = (1..n).map(Generator::sigma).collect();
        if with_rho {
            out.extend((1..n).map(Generator::rho));
        }
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GenKind::Sigma => 's',
            GenKind::Rho => 'r',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Generator> {
        let bad = || Error::Parse(format!("bad generator `{s}`"));
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('s') | Some('σ') => GenKind::Sigma,
            Some('r') | Some('ρ') => GenKind::Rho,
            _ => return Err(bad()),
        };
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Generator { kind, index })
    }
}

/// A product of generators, read left to right. Letters are stored as given;
/// [`Word::reduced`] cancels adjacent equal pairs, which is the only rewriting
/// valid in the flat virtual braid group (every generator is an involution).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    /// Largest generator index used, 0 for the empty word.
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|g| g.index).max().unwrap_or(0)
    }

    pub fn min_index(&self) -> usize {
        self.0.iter().map(|g| g.index).min().unwrap_or(0)
    }

    /// Every index shifted by `k` (homogeneity checks).
    pub fn shifted(&self, k: usize) -> Word {
        Word(
            self.0
                .iter()
                .map(|g| Generator {
                    kind: g.kind,
                    index: g.index + k,
                })
                .collect(),
        )
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Free cancellation of adjacent equal letters, stack-based.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<Generator> = Vec::with_capacity(self.0.len());
        for &g in &self.0 {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }
}

pub fn reduce_word(w: &Word) -> Word {
    w.reduced()
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Word {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `"s1 r1 s1"`, `"s1r1s1"` or `"e"` / `""` for the identity.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut cur = String::new();
        for c in s.chars() {
            if c.is_whitespace() || c == '*' || c == '·' {
                continue;
            }
            if !c.is_ascii_digit() && !cur.is_empty() {
                letters.push(cur.parse()?);
                cur.clear();
            }
            cur.push(c);
        }
        if !cur.is_empty() {
            letters.push(cur.parse()?);
        }
        Ok(Word(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(w("s1 s1").reduced(), Word::empty());
        assert_eq!(w("r1 s2 s2 r1").reduced(), Word::empty());
        assert_eq!(w("s1 r1 s1").reduced(), w("s1 r1 s1"));
    }

    #[test]
    fn text_roundtrip() {
        for s in ["s1 r1 s1", "e", "r12 s3"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(w("s1r1s1"), w("s1 r1 s1"));
        assert!("x1".parse::<Word>().is_err());
        assert!("s0".parse::<Word>().is_err());
    }
}
