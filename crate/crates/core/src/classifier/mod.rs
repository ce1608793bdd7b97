//! Re-derivation of the classification: polynomial systems from the group
//! relations, a case-splitting solver, template matching against the
//! catalog, and finite-field censuses.

mod census;
mod factor;
mod solver;
mod system;
mod templates;

pub use factor::{factor_poly, Factorization};
pub use solver::{branch_solve, BranchSolution, SolveOutcome};
pub use system::{build_system, compare_with_paper, paper_equations, PolySystem, SystemComparison, SystemKind};
pub use templates::{branch_blocks, classify_branches, match_first, match_template, BranchClass, Template, TemplateMatch};
pub use census::{census_fvb_local, census_involutions_2x2, census_templates, CensusReport, LiftStatus, Unmatched};
