//! Exact verification of Hopf braces, brace triples and post-Hopf algebras.
//!
//! Every structure is a bundle of rational matrices over a strict symmetric
//! monoidal category of finite-dimensional (optionally super) spaces. Axioms
//! are checked as exact matrix equalities and reported clause by clause.

pub mod bracelab;
pub mod error;
pub mod exhibits;
pub mod functors;
pub mod hopfcore;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensorcat;

pub use error::{Error, Result};
pub use report::Report;
pub use scalar::Scalar;
