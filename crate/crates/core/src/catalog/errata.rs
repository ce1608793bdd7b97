//! Candidate corrections for transcriptions that fail relation checking.
//!
//! The catalog keeps every family exactly as printed; these one-entry
//! amendments are what the finite-field census recovers as unmatched
//! survivors, and are offered only as findings.

use serde::Serialize;

use super::family::{BlockSpec, FamilyId};
use crate::error::Result;
use crate::linalg::ratfunc_matrix;

#[derive(Clone, Debug, Serialize)]
pub struct Erratum {
    pub family: FamilyId,
    pub change: String,
    #[serde(skip)]
    pub spec: BlockSpec,
}

pub fn errata_candidates() -> Result<Vec<Erratum>> {
    let m = ratfunc_matrix;
    let cons = |v: &[&str]| v.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>();
    Ok(vec![
        Erratum {
            family: FamilyId::Delta(5),
            change: "rho block third row (0, 1, 1) -> (0, 0, 1)".into(),
            spec: BlockSpec::new(
                FamilyId::Custom,
                m(&[&["0", "1/x", "0"], &["x", "0", "0"], &["0", "0", "1"]])?,
                Some(m(&[&["0", "y", "0"], &["1/y", "0", "0"], &["0", "0", "1"]])?),
                cons(&["x", "y"])?,
            )?,
        },
        Erratum {
            family: FamilyId::Delta(7),
            change: "rho block entry (3,3): 0 -> 1, making rho equal to sigma".into(),
            spec: BlockSpec::new(
                FamilyId::Custom,
                m(&[&["1", "x", "0"], &["0", "-1", "0"], &["0", "1/x", "1"]])?,
                Some(m(&[&["1", "x", "0"], &["0", "-1", "0"], &["0", "1/x", "1"]])?),
                cons(&["x"])?,
            )?,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{assemble_local, family, verify_relations};

    #[test]
    fn amendments_repair_the_failing_transcriptions() {
        for e in errata_candidates().unwrap() {
            for n in 4..=5 {
                assert!(!verify_relations(&family(e.family, n).unwrap()).all_pass());
                assert!(verify_relations(&assemble_local(n, &e.spec).unwrap()).all_pass(), "{:?} n={n}", e.family);
            }
        }
    }
}
