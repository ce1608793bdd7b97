//! Irreducibility and faithfulness oracles, and the harness comparing their
//! verdicts with the stated conditions.

mod faithfulness;
mod invariant;
mod irreducibility;
mod sampling;

pub use faithfulness::{
    amended_witnesses, certified_nontrivial, dihedral_power_formula, kernel_search, symbolic_witnesses,
    DihedralCheck, FaithfulnessFinding, FindingKind, SymbolicWitness, MAX_LEN_FVB2, MAX_LEN_FVBN,
};
pub use invariant::{common_fixed_space, common_invariant_line};
pub use irreducibility::{
    burnside_sweep, burnside_verdict, compare_irreducibility, paper_claim, paper_condition, sweep_region,
    BurnsideSummary, ComparisonReport, Disagreement, IrreducibilityVerdict, Method, PmReading, Verdict,
};
pub use sampling::{random_bindings, rng_for};
