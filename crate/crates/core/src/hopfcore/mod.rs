//! Algebras, coalgebras, Hopf algebras, convolution and their axiom checks.

mod checks;
mod convolution;
mod structs;

pub use checks::{
    action_fixes_unit, check_algebra, check_bialgebra, check_coalgebra, check_cocommutative, check_hopf,
    check_hopf_morphism, check_module_algebra, check_module_coalgebra, is_cocommutative, is_commutative,
};
pub use convolution::{convolution_inverse, convolve, derive_antipode, ConvolutionContext};
pub use structs::{cop, AlgebraStruct, CoalgebraStruct, HopfAlgebra};

#[cfg(test)]
mod tests;
