use crate::bracelab::HopfBrace;
use crate::error::{Error, Result};
use crate::hopfcore::HopfAlgebra;
use crate::scalar::Scalar;
use crate::tensorcat::{BraidingKind, Mor, Obj};

use super::group::FiniteGroup;
use super::skew::SkewBrace;

/// The group algebra `K[G]` with basis `G`, `δ(g) = g⊗g`, `ε(g) = 1` and
/// `λ(g) = g⁻¹`. Group algebras are ungraded, so only the plain flip is
/// accepted.
pub fn group_algebra(g: &FiniteGroup, braid: BraidingKind) -> Result<HopfAlgebra> {
    if braid != BraidingKind::Flip {
        return Err(Error::InvalidInput("group algebras are ungraded; use the plain flip".into()));
    }
    Ok(linearize(g))
}

fn linearize(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let h = Obj::new("H", n);
    let hh = h.tensor(&h);
    let k = Obj::unit();
    HopfAlgebra::new(
        h.clone(),
        BraidingKind::Flip,
        Mor::from_basis_map(&k, &h, |_| g.identity()),
        Mor::from_basis_map(&hh, &h, |x| g.mul(x / n, x % n)),
        Mor::from_basis_map(&h, &k, |_| 0),
        Mor::from_basis_map(&h, &hh, |x| x * n + x),
        Mor::from_basis_map(&h, &h, |x| g.inv(x)),
    )
    .expect("group algebra maps are well typed")
}

/// `(K[G, ·], K[G, ⋆])`.
pub fn hopf_brace_from_skew_brace(s: &SkewBrace) -> HopfBrace {
    HopfBrace::new(linearize(s.dot()), linearize(s.circ())).expect("shared coalgebra")
}

/// The two-dimensional super Hopf algebra with even `1` and odd primitive `x`,
/// `x² = 0` and `λ(x) = -x`, over the graded flip.
pub fn super_line() -> HopfAlgebra {
    let h = Obj::graded("H", vec![0, 1]).expect("valid grading");
    let hh = h.tensor(&h);
    let k = Obj::unit();
    let one = Scalar::one;
    // μ(e_a ⊗ e_b) = e_{a+b} unless a = b = 1
    let mul = Mor::from_columns(&hh, &h, |j| match j {
        0 => vec![(0, one())],
        1 | 2 => vec![(1, one())],
        _ => vec![],
    });
    let comul = Mor::from_columns(&h, &hh, |j| match j {
        0 => vec![(0, one())],
        _ => vec![(1, one()), (2, one())],
    });
    let antipode = Mor::from_columns(&h, &h, |j| vec![(j, if j == 0 { one() } else { -one() })]);
    HopfAlgebra::new(
        h.clone(),
        BraidingKind::GradedFlip,
        Mor::from_basis_map(&k, &h, |_| 0),
        mul,
        Mor::from_columns(&h, &k, |j| if j == 0 { vec![(0, one())] } else { vec![] }),
        comul,
        antipode,
    )
    .expect("super line maps are well typed")
}

/// Sweedler's four-dimensional Hopf algebra over the plain flip, with basis
/// `1, g, x, gx`, `g² = 1`, `x² = 0`, `xg = -gx`, `g` grouplike and
/// `δ(x) = x⊗1 + g⊗x`. Neither commutative nor cocommutative; `λ` has order 4.
pub fn sweedler() -> HopfAlgebra {
    let h = Obj::new("H", 4);
    let hh = h.tensor(&h);
    let k = Obj::unit();
    let sign = |neg: bool| if neg { -Scalar::one() } else { Scalar::one() };
    // basis index a + 2b is g^a x^b
    let mul = Mor::from_columns(&hh, &h, |j| {
        let (l, r) = (j / 4, j % 4);
        let (a, b, c, d) = (l % 2, l / 2, r % 2, r / 2);
        if b + d == 2 {
            vec![]
        } else {
            vec![((a + c) % 2 + 2 * (b + d), sign(b * c == 1))]
        }
    });
    let pair = |l: usize, r: usize| l * 4 + r;
    let comul = Mor::from_columns(&h, &hh, |j| match j {
        0 => vec![(pair(0, 0), Scalar::one())],
        1 => vec![(pair(1, 1), Scalar::one())],
        2 => vec![(pair(2, 0), Scalar::one()), (pair(1, 2), Scalar::one())],
        _ => vec![(pair(3, 1), Scalar::one()), (pair(0, 3), Scalar::one())],
    });
    let antipode = Mor::from_columns(&h, &h, |j| match j {
        0 | 1 => vec![(j, Scalar::one())],
        2 => vec![(3, -Scalar::one())],
        _ => vec![(2, Scalar::one())],
    });
    HopfAlgebra::new(
        h.clone(),
        BraidingKind::Flip,
        Mor::from_basis_map(&k, &h, |_| 0),
        mul,
        Mor::from_columns(&h, &k, |j| if j < 2 { vec![(0, Scalar::one())] } else { vec![] }),
        comul,
        antipode,
    )
    .expect("Sweedler maps are well typed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{check_hopf, derive_antipode};

    #[test]
    fn group_algebras_are_hopf() {
        for g in FiniteGroup::builtin() {
            let r = check_hopf(&group_algebra(&g, BraidingKind::Flip).unwrap());
            assert!(r.all_passed(), "{}\n{r}", g.name());
            assert_eq!(r.get_property("commutative"), Some(g.is_abelian()));
            assert_eq!(r.get_property("cocommutative"), Some(true));
        }
    }

    #[test]
    fn group_algebra_rejects_graded_flip() {
        assert!(group_algebra(&FiniteGroup::cyclic(2), BraidingKind::GradedFlip).is_err());
    }

    #[test]
    fn super_line_is_hopf() {
        let s = super_line();
        let r = check_hopf(&s);
        assert!(r.all_passed(), "{r}");
        // graded commutative and cocommutative
        assert_eq!(r.get_property("commutative"), Some(true));
        assert_eq!(r.get_property("cocommutative"), Some(true));
        let derived = derive_antipode(&s.algebra(), &s.coalgebra()).unwrap();
        assert_eq!(&derived, s.antipode());
    }

    #[test]
    fn super_line_fails_over_plain_flip() {
        let s = super_line();
        let plain = HopfAlgebra::new(
            s.carrier().clone(),
            BraidingKind::Flip,
            s.unit().clone(),
            s.mul().clone(),
            s.counit().clone(),
            s.comul().clone(),
            s.antipode().clone(),
        )
        .unwrap();
        let r = check_hopf(&plain);
        assert!(!r.passed("bialgebra.comul_multiplicative"), "{r}");
    }

    #[test]
    fn sweedler_is_hopf_with_antipode_of_order_four() {
        let s = sweedler();
        let r = check_hopf(&s);
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.get_property("commutative"), Some(false));
        assert_eq!(r.get_property("cocommutative"), Some(false));
        let l = s.antipode();
        assert_ne!(l.after(l), s.id());
        assert_eq!(l.after(l).after(l).after(l), s.id());
        assert_eq!(&derive_antipode(&s.algebra(), &s.coalgebra()).unwrap(), l);
    }
}
