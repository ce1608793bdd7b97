//! The flat virtual braid group on two strands is `Z/2 * Z/2`: reduced words
//! simply alternate `σ₁` and `ρ₁`.

use std::fmt;

use serde::Serialize;

use super::word::{GenKind, Generator, Word};
use crate::error::{Error, Result};

/// The four alternating shapes:
/// `w1 = (σρ)^n`, `w2 = (ρσ)^n`, `w3 = σ(ρσ)^n`, `w4 = (ρσ)^n ρ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Fvb2Shape {
    W1,
    W2,
    W3,
    W4,
}

impl fmt::Display for Fvb2Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fvb2Shape::W1 => "w1",
            Fvb2Shape::W2 => "w2",
            Fvb2Shape::W3 => "w3",
            Fvb2Shape::W4 => "w4",
        })
    }
}

impl Fvb2Shape {
    pub fn word(self, n: usize) -> Word {
        let sr = Word::new(vec![Generator::sigma(1), Generator::rho(1)]);
        let rs = Word::new(vec![Generator::rho(1), Generator::sigma(1)]);
        match self {
            Fvb2Shape::W1 => sr.pow(n),
            Fvb2Shape::W2 => rs.pow(n),
            Fvb2Shape::W3 => Word::new(vec![Generator::sigma(1)]).concat(&rs.pow(n)),
            Fvb2Shape::W4 => rs.pow(n).concat(&Word::new(vec![Generator::rho(1)])),
        }
    }
}

/// All nonempty reduced words of length ≤ `max_len`, by length, σ-first.
pub fn fvb2_enumerate(max_len: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity(2 * max_len);
    for len in 1..=max_len {
        for first in [Generator::sigma(1), Generator::rho(1)] {
            let other = if first.kind == GenKind::Sigma {
                Generator::rho(1)
            } else {
                Generator::sigma(1)
            };
            out.push(Word::new(
                (0..len).map(|i| if i % 2 == 0 { first } else { other }).collect(),
            ));
        }
    }
    out
}

pub fn classify_fvb2_shape(w: &Word) -> Result<(Fvb2Shape, usize)> {
    if w.letters().iter().any(|g| g.index != 1) {
        return Err(Error::AlphabetMismatch(format!("`{w}` is not over {{s1, r1}}")));
    }
    if w.is_empty() || !w.is_reduced() {
        return Err(Error::AlphabetMismatch(format!("`{w}` is not a reduced nonempty word")));
    }
    let starts_sigma = w.letters()[0].kind == GenKind::Sigma;
    let len = w.len();
    Ok(match (len.is_multiple_of(2), starts_sigma) {
        (true, true) => (Fvb2Shape::W1, len / 2),
        (true, false) => (Fvb2Shape::W2, len / 2),
        (false, true) => (Fvb2Shape::W3, len / 2),
        (false, false) => (Fvb2Shape::W4, len / 2),
    })
}
