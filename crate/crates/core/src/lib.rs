//! Exact-arithmetic toolkit for local representations of flat virtual braid
//! groups: symbolic representation families, relation checking, a branch
//! solver for the defining polynomial systems, finite-field censuses, and
//! irreducibility/faithfulness oracles.

pub mod analysis;
pub mod braid;
pub mod catalog;
pub mod classifier;
pub mod error;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
