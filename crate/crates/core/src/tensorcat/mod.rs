//! Strict symmetric monoidal engine over the rationals.
//!
//! Objects are finite-dimensional, optionally `Z/2`-graded spaces; morphisms
//! are exact matrices with row index = codomain basis and column index =
//! domain basis. Tensor products use left-major flat indexing:
//! `e_i ⊗ e_j` sits at `i * dim(right) + j`.

mod braid;
mod dual;
mod mor;
mod obj;

pub use braid::{braiding, braiding_inverse, BraidingKind};
pub use dual::{coevaluation, evaluation};
pub use mor::{compose, mor_equal, tensor, Mor};
pub use obj::Obj;
