use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensorcat::{Mor, Obj};

/// The built-in symmetric braidings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BraidingKind {
    /// `e_i ⊗ e_j -> e_j ⊗ e_i`.
    Flip,
    /// The Koszul sign rule: `e_i ⊗ e_j -> (-1)^{|i||j|} e_j ⊗ e_i`.
    GradedFlip,
}

impl BraidingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BraidingKind::Flip => "flip",
            BraidingKind::GradedFlip => "graded_flip",
        }
    }

    /// Both built-ins are symmetries, so the inverse braiding is the same kind.
    pub fn inverse(self) -> BraidingKind {
        self
    }
}

/// `c_{X,Y}: X ⊗ Y -> Y ⊗ X`.
pub fn braiding(kind: BraidingKind, x: &Obj, y: &Obj) -> Result<Mor> {
    if kind == BraidingKind::GradedFlip {
        for o in [x, y] {
            if !o.is_graded() {
                return Err(Error::MissingGrading(o.clone()));
            }
        }
    }
    let (m, n) = (x.dim(), y.dim());
    let dom = x.tensor(y);
    let cod = y.tensor(x);
    Ok(Mor::from_columns(&dom, &cod, |col| {
        let (i, j) = (col / n, col % n);
        let odd = kind == BraidingKind::GradedFlip && x.parity(i) == 1 && y.parity(j) == 1;
        let sign = if odd { Scalar::from_int(-1) } else { Scalar::one() };
        [(j * m + i, sign)]
    }))
}

/// `c_{X,Y}^{-1}: Y ⊗ X -> X ⊗ Y`, which is `c_{Y,X}` for a symmetry.
pub fn braiding_inverse(kind: BraidingKind, x: &Obj, y: &Obj) -> Result<Mor> {
    braiding(kind, y, x)
}
