//! Symbolic representation families, block assembly, word evaluation and
//! relation checking.

mod errata;
mod family;
mod rep;
mod verify;

pub use errata::{errata_candidates, Erratum};
pub use family::{BlockSpec, FamilyId};
pub use rep::{assemble_local, family, local_images, RepInstance};
pub use verify::{
    default_n, determinant_checks, dump_family, verify_against, verify_relations, CheckStatus,
    DeterminantCheck, FamilyDump, Offending, RelationCheck, RelationReport,
};
