//! Finite groups, skew braces and the Hopf structures they linearize to.

mod corpus;
mod group;
mod linearize;
mod skew;

pub use corpus::{extra_hopf_algebras, skew_brace_corpus, trivial_post_hopf, trivial_triple};
pub use group::FiniteGroup;
pub use linearize::{group_algebra, hopf_brace_from_skew_brace, super_line, sweedler};
pub use skew::{compatible, enumerate_skew_braces, SkewBrace, ENUMERATION_BOUND};
