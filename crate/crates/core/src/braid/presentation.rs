use std::fmt;

use serde::Serialize;

use super::word::{Generator, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupKind {
    #[serde(rename = "B")]
    Braid,
    #[serde(rename = "VB")]
    Virtual,
    #[serde(rename = "FVB")]
    FlatVirtual,
}

impl GroupKind {
    pub fn has_rho(self) -> bool {
        !matches!(self, GroupKind::Braid)
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Braid => "B",
            GroupKind::Virtual => "VB",
            GroupKind::FlatVirtual => "FVB",
        })
    }
}

/// One defining relation `lhs = rhs`, tagged with the relation family it
/// comes from (1..=8, in the standard numbering of the braid, virtual and
/// flat relations) and the indices that instantiate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub family: u8,
    pub indices: Vec<usize>,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn id(&self) -> String {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        format!("R{}[{}]", self.family, idx.join(","))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.id(), self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub n: usize,
    pub kind: GroupKind,
    pub relations: Vec<Relation>,
}

fn s(i: usize) -> Generator {
    Generator::sigma(i)
}

fn r(i: usize) -> Generator {
    Generator::rho(i)
}

fn rel(family: u8, indices: Vec<usize>, lhs: Vec<Generator>, rhs: Vec<Generator>) -> Relation {
    Relation {
        family,
        indices,
        lhs: Word::new(lhs),
        rhs: Word::new(rhs),
    }
}

fn far_pairs(n: usize, ordered: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 && (ordered || i < j) {
                out.push((i, j));
            }
        }
    }
    out
}

impl Presentation {
    pub fn new(kind: GroupKind, n: usize) -> Result<Presentation> {
        if n < 2 {
            return Err(Error::InvalidStrandCount {
                n,
                reason: "at least two strands are required".into(),
            });
        }
        let mut relations = Vec::new();
        // 1: braid relation; 2: far commutation.
        for i in 1..n - 1 {
            relations.push(rel(1, vec![i], vec![s(i), s(i + 1), s(i)], vec![s(i + 1), s(i), s(i + 1)]));
        }
        for (i, j) in far_pairs(n, false) {
            relations.push(rel(2, vec![i, j], vec![s(i), s(j)], vec![s(j), s(i)]));
        }
        if kind.has_rho() {
            for i in 1..n - 1 {
                relations.push(rel(3, vec![i], vec![r(i), r(i + 1), r(i)], vec![r(i + 1), r(i), r(i + 1)]));
            }
            for (i, j) in far_pairs(n, false) {
                relations.push(rel(4, vec![i, j], vec![r(i), r(j)], vec![r(j), r(i)]));
            }
            for i in 1..n {
                relations.push(rel(5, vec![i], vec![r(i), r(i)], vec![]));
            }
            for (i, j) in far_pairs(n, true) {
                relations.push(rel(6, vec![i, j], vec![s(i), r(j)], vec![r(j), s(i)]));
            }
            for i in 1..n - 1 {
                relations.push(rel(
                    7,
                    vec![i],
                    vec![r(i), r(i + 1), s(i)],
                    vec![s(i + 1), r(i), r(i + 1)],
                ));
            }
        }
        if kind == GroupKind::FlatVirtual {
            for i in 1..n {
                relations.push(rel(8, vec![i], vec![s(i), s(i)], vec![]));
            }
        }
        Ok(Presentation { n, kind, relations })
    }

    pub fn generators(&self) -> Vec<Generator> {
        Generator::all(self.n, self.kind.has_rho())
    }

    pub fn contains(&self, g: Generator) -> bool {
        g.index >= 1 && g.index < self.n && (g.kind == super::GenKind::Sigma || self.kind.has_rho())
    }
}

pub fn fvb_presentation(n: usize) -> Result<Presentation> {
    Presentation::new(GroupKind::FlatVirtual, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_by_family(p: &Presentation) -> [usize; 9] {
        let mut c = [0; 9];
        for r in &p.relations {
            c[r.family as usize] += 1;
        }
        c
    }

    #[test]
    fn relation_counts() {
        assert_eq!(fvb_presentation(2).unwrap().relations.len(), 2);
        let p3 = fvb_presentation(3).unwrap();
        assert_eq!(p3.relations.len(), 7);
        assert_eq!(count_by_family(&p3), [0, 1, 0, 1, 0, 2, 0, 1, 2]);
        let p4 = fvb_presentation(4).unwrap();
        assert_eq!(count_by_family(&p4), [0, 2, 1, 2, 1, 3, 2, 2, 3]);
        assert_eq!(p4.relations.len(), 16);
    }

    #[test]
    fn rejects_single_strand() {
        assert!(fvb_presentation(1).is_err());
        assert!(Presentation::new(GroupKind::Braid, 0).is_err());
    }

    #[test]
    fn braid_group_has_only_sigma() {
        let p = Presentation::new(GroupKind::Braid, 5).unwrap();
        assert!(p.relations.iter().all(|r| r.family <= 2));
        assert_eq!(p.generators().len(), 4);
    }
}
