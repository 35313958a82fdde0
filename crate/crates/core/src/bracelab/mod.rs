//! Hopf braces, brace triples and post-Hopf algebras with their checkers.

mod brace;
mod morphism;
mod post;
mod triple;

pub use brace::{check_hopf_brace, check_s_hopf_brace, gamma_of_brace, HopfBrace, SHopfBraceWitness};
pub use morphism::{check_brace_morphism, check_post_hopf_morphism, check_triple_morphism};
pub use post::{
    alpha_of, beta_closed_form, check_lambda_hat, check_post_hopf, check_star_condition, mu_bt, sub_product,
    PostHopfAlgebra,
};
pub use triple::{check_brace_triple, BraceTriple};

use crate::hopfcore::HopfAlgebra;

/// Any of the structures the library checks.
#[derive(Debug, Clone, PartialEq)]
// one value per loaded file, so the variant size gap is harmless
#[allow(clippy::large_enum_variant)]
pub enum Structure {
    Hopf(HopfAlgebra),
    HopfBrace(HopfBrace),
    BraceTriple(BraceTriple),
    PostHopf(PostHopfAlgebra),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Hopf(_) => "hopf",
            Structure::HopfBrace(_) => "hopf_brace",
            Structure::BraceTriple(_) => "brace_triple",
            Structure::PostHopf(_) => "post_hopf",
        }
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        match self {
            Structure::Hopf(h) => h,
            Structure::HopfBrace(b) => b.first(),
            Structure::BraceTriple(t) => t.hopf(),
            Structure::PostHopf(p) => p.hopf(),
        }
    }
}
