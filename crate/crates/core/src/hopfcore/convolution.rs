use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hopfcore::{AlgebraStruct, CoalgebraStruct};
use crate::linalg::{self, SparseRow};
use crate::scalar::Scalar;
use crate::tensorcat::Mor;

/// The convolution algebra `H(D, A)` of maps from a coalgebra to an algebra.
#[derive(Debug, Clone)]
pub struct ConvolutionContext {
    pub source: CoalgebraStruct,
    pub target: AlgebraStruct,
}

impl ConvolutionContext {
    pub fn new(source: CoalgebraStruct, target: AlgebraStruct) -> Self {
        ConvolutionContext { source, target }
    }

    fn expect_arrow(&self, f: &Mor) -> Result<()> {
        if f.dom() != &self.source.carrier {
            return Err(Error::DomainMismatch { expected: self.source.carrier.clone(), found: f.dom().clone() });
        }
        if f.cod() != &self.target.carrier {
            return Err(Error::DomainMismatch { expected: self.target.carrier.clone(), found: f.cod().clone() });
        }
        Ok(())
    }

    /// `η_A ∘ ε_D`.
    pub fn unit(&self) -> Mor {
        self.target.unit.after(&self.source.counit)
    }

    pub fn convolve(&self, f: &Mor, g: &Mor) -> Result<Mor> {
        convolve(self, f, g)
    }

    pub fn inverse(&self, f: &Mor) -> Result<Mor> {
        convolution_inverse(self, f)
    }
}

/// `f ∗ g = μ_A ∘ (f ⊗ g) ∘ δ_D`.
pub fn convolve(ctx: &ConvolutionContext, f: &Mor, g: &Mor) -> Result<Mor> {
    ctx.expect_arrow(f)?;
    ctx.expect_arrow(g)?;
    Ok(ctx.target.mul.after(&f.ox(g)).after(&ctx.source.comul))
}

/// Solves `f ∗ β = η_A ∘ ε_D` for `β` by exact elimination, then verifies
/// `β ∗ f` is the unit as well.
///
/// The unknowns are the `dim A · dim D` entries of `β`; unknown `y·dim D + d`
/// is the entry at row `y`, column `d`, and equation `r·dim D + d` is entry
/// `(r, d)` of `f ∗ β`.
pub fn convolution_inverse(ctx: &ConvolutionContext, f: &Mor) -> Result<Mor> {
    ctx.expect_arrow(f)?;
    let dd = ctx.source.carrier.dim();
    let da = ctx.target.carrier.dim();
    let n = dd * da;

    // (f ⊗ D) ∘ δ_D: D -> A ⊗ D, row x·dd + d2
    let d_obj = &ctx.source.carrier;
    let spread = f.ox(&Mor::identity(d_obj)).after(&ctx.source.comul);

    let mut eqs: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n];
    for d in 0..dd {
        for (row, v) in spread.column(d) {
            let (x, d2) = (row / dd, row % dd);
            for y in 0..da {
                for (r, w) in ctx.target.mul.column(x * da + y) {
                    let e = eqs[r * dd + d].entry(y * dd + d2).or_insert_with(Scalar::zero);
                    *e += &(v * w);
                }
            }
        }
    }
    let unit = ctx.unit();
    let rows: Vec<SparseRow> = eqs
        .into_iter()
        .enumerate()
        .map(|(eq, coeffs)| {
            let mut row: SparseRow = coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            let rhs = unit.entry(eq / dd, eq % dd);
            if !rhs.is_zero() {
                row.push((n, rhs));
            }
            row
        })
        .collect();
    let sol = linalg::solve_augmented(rows, n, 1)?.remove(0);
    let beta = Mor::from_columns(&ctx.source.carrier, &ctx.target.carrier, |d| {
        (0..da).map(|y| (y, sol[y * dd + d].clone())).filter(|(_, v)| !v.is_zero()).collect::<Vec<_>>()
    });
    if convolve(ctx, f, &beta)? != unit {
        return Err(Error::InternalInconsistency("solver output fails f * beta = unit".into()));
    }
    if convolve(ctx, &beta, f)? != unit {
        return Err(Error::InternalInconsistency("right inverse is not a left inverse".into()));
    }
    Ok(beta)
}

/// The antipode of a bialgebra: the convolution inverse of the identity.
pub fn derive_antipode(algebra: &AlgebraStruct, coalgebra: &CoalgebraStruct) -> Result<Mor> {
    if algebra.carrier != coalgebra.carrier {
        return Err(Error::DomainMismatch { expected: algebra.carrier.clone(), found: coalgebra.carrier.clone() });
    }
    let ctx = ConvolutionContext::new(coalgebra.clone(), algebra.clone());
    let id = Mor::identity(&algebra.carrier);
    convolution_inverse(&ctx, &id)
}
