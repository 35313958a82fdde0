use crate::scalar::Scalar;
use crate::tensorcat::{Mor, Obj};

/// `a_X(K): K -> X* ⊗ X`, the sum of `e_i* ⊗ e_i`.
pub fn coevaluation(x: &Obj) -> Mor {
    let n = x.dim();
    let cod = x.dual().tensor(x);
    Mor::from_columns(&Obj::unit(), &cod, |_| (0..n).map(|i| (i * n + i, Scalar::one())))
}

/// `b_X(K): X ⊗ X* -> K`, pairing `e_i ⊗ e_j*` to `δ_ij`.
pub fn evaluation(x: &Obj) -> Mor {
    let n = x.dim();
    let dom = x.tensor(&x.dual());
    Mor::from_columns(&dom, &Obj::unit(), |col| {
        (col / n == col % n).then(|| (0, Scalar::one()))
    })
}
