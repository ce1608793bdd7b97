//! Presentations of the braid, virtual braid and flat virtual braid groups,
//! and words in their generators.

mod fvb2;
mod presentation;
mod word;

pub use fvb2::{classify_fvb2_shape, fvb2_enumerate, Fvb2Shape};
pub use presentation::{fvb_presentation, GroupKind, Presentation, Relation};
pub use word::{reduce_word, GenKind, Generator, Word};
