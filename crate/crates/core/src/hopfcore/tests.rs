use proptest::prelude::*;

use super::*;
use crate::exhibits::{group_algebra, super_line, sweedler, FiniteGroup};
use crate::scalar::Scalar;
use crate::tensorcat::{BraidingKind, Mor, Obj};

fn kg(g: &FiniteGroup) -> HopfAlgebra {
    group_algebra(g, BraidingKind::Flip).unwrap()
}

fn c2() -> HopfAlgebra {
    kg(&FiniteGroup::cyclic(2))
}

fn dense(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
    rows.iter().map(|r| r.iter().map(|&v| Scalar::from(v)).collect()).collect()
}

#[test]
fn counit_after_unit_is_one() {
    let h = c2();
    assert_eq!(h.counit().after(h.unit()), Mor::identity(&Obj::unit()));
}

#[test]
fn square_map_on_c2() {
    let h = c2();
    let expected = Mor::from_rows(h.carrier(), h.carrier(), dense(&[&[1, 1], &[0, 0]])).unwrap();
    assert_eq!(h.mul().after(h.comul()), expected);
    assert_eq!(h.convolve(&h.id(), &h.id()), expected);
}

#[test]
fn convolution_unit_laws() {
    let h = kg(&FiniteGroup::symmetric3());
    let ctx = ConvolutionContext::new(h.coalgebra(), h.algebra());
    let u = ctx.unit();
    assert_eq!(ctx.convolve(&u, &h.id()).unwrap(), h.id());
    assert_eq!(ctx.convolve(h.antipode(), &u).unwrap(), *h.antipode());
    assert_eq!(ctx.convolve(&h.id(), h.antipode()).unwrap(), h.unit_counit());
    assert_eq!(ctx.inverse(&u).unwrap(), u);
}

#[test]
fn derived_antipode_is_inversion() {
    for g in FiniteGroup::builtin() {
        let h = kg(&g);
        let lam = derive_antipode(&h.algebra(), &h.coalgebra()).unwrap();
        let expected = Mor::from_basis_map(h.carrier(), h.carrier(), |x| g.inv(x));
        assert_eq!(lam, expected, "{}", g.name());
    }
    let h = c2();
    assert_eq!(derive_antipode(&h.algebra(), &h.coalgebra()).unwrap(), h.id());
}

#[test]
fn derived_antipode_on_super_line() {
    let s = super_line();
    let lam = derive_antipode(&s.algebra(), &s.coalgebra()).unwrap();
    let expected = Mor::from_rows(s.carrier(), s.carrier(), dense(&[&[1, 0], &[0, -1]])).unwrap();
    assert_eq!(lam, expected);
}

#[test]
fn bialgebra_without_antipode() {
    // the monoid {1, 0} under multiplication: group-like basis, no inverse for 0
    let h = Obj::new("H", 2);
    let hh = h.tensor(&h);
    let k = Obj::unit();
    let alg = AlgebraStruct::new(
        h.clone(),
        Mor::from_basis_map(&k, &h, |_| 0),
        Mor::from_basis_map(&hh, &h, |j| usize::from(j != 0)),
    )
    .unwrap();
    let coalg = CoalgebraStruct::new(
        h.clone(),
        Mor::from_basis_map(&h, &k, |_| 0),
        Mor::from_basis_map(&h, &hh, |x| 3 * x),
    )
    .unwrap();
    assert!(check_bialgebra(&alg, &coalg, BraidingKind::Flip).all_passed());
    assert!(matches!(derive_antipode(&alg, &coalg), Err(crate::Error::NotInvertible { .. })));
}

#[test]
fn s3_properties() {
    let r = check_hopf(&kg(&FiniteGroup::symmetric3()));
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.get_property("commutative"), Some(false));
    assert_eq!(r.get_property("cocommutative"), Some(true));
    assert!(check_cocommutative(&kg(&FiniteGroup::symmetric3())).all_passed());
}

#[test]
fn perturbed_product_fails() {
    let h = c2();
    for (r, c) in [(0, 0), (1, 0), (0, 3), (1, 2)] {
        let bump = Mor::from_columns(h.mul().dom(), h.mul().cod(), |j| {
            if j == c {
                vec![(r, Scalar::one())]
            } else {
                vec![]
            }
        });
        let bad = h.with_mul(h.mul().add(&bump).unwrap()).unwrap();
        let rep = check_hopf(&bad);
        assert!(!rep.all_passed(), "({r},{c})");
    }
}

#[test]
fn cop_of_cocommutative_keeps_comul() {
    let h = kg(&FiniteGroup::symmetric3());
    let hc = cop(&h).unwrap();
    assert_eq!(hc.comul(), h.comul());
    assert_eq!(cop(&hc).unwrap(), h);
}

#[test]
fn cop_of_non_cocommutative_is_hopf() {
    for h in [super_line(), sweedler()] {
        let hc = cop(&h).unwrap();
        assert!(check_hopf(&hc).all_passed());
        assert_eq!(cop(&hc).unwrap(), h);
    }
    assert_ne!(cop(&sweedler()).unwrap().comul(), sweedler().comul());
}

#[test]
fn trivial_action_is_module_algebra_and_coalgebra() {
    let h = kg(&FiniteGroup::symmetric3());
    let triv = h.counit().ox(&h.id());
    assert!(check_module_algebra(&h, &h.algebra(), &triv).all_passed());
    assert!(check_module_coalgebra(&h, &h.coalgebra(), &triv).all_passed());
    assert!(action_fixes_unit(&h, &h, &triv));
}

#[test]
fn left_multiplication_is_not_a_module_algebra() {
    let h = kg(&FiniteGroup::cyclic(3));
    let r = check_module_algebra(&h, &h.algebra(), h.mul());
    assert!(r.passed("module.associativity"));
    assert!(!r.passed("module_algebra.unit"));
}

#[test]
fn automorphisms_are_hopf_morphisms() {
    let g = FiniteGroup::symmetric3();
    let h = kg(&g);
    for aut in g.automorphisms() {
        let f = Mor::from_basis_map(h.carrier(), h.carrier(), |x| aut[x]);
        assert!(check_hopf_morphism(&f, &h, &h).all_passed());
    }
    // sign map S3 → C2
    let sign = &g.homomorphisms_to(&FiniteGroup::cyclic(2))[1];
    let f = Mor::from_basis_map(h.carrier(), c2().carrier(), |x| sign[x]);
    assert!(check_hopf_morphism(&f, &h, &c2()).all_passed());
}

fn arb_map(n: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec((-3i64..4).prop_map(Scalar::from), n), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_of_inverse(rows in arb_map(3)) {
        let h = kg(&FiniteGroup::cyclic(3));
        let ctx = ConvolutionContext::new(h.coalgebra(), h.algebra());
        let f = Mor::from_rows(h.carrier(), h.carrier(), rows).unwrap();
        if let Ok(b) = ctx.inverse(&f) {
            prop_assert_eq!(ctx.inverse(&b).unwrap(), f);
        }
    }

    #[test]
    fn convolution_is_associative(a in arb_map(2), b in arb_map(2), c in arb_map(2)) {
        let h = super_line();
        let m = |r| Mor::from_rows(h.carrier(), h.carrier(), r).unwrap();
        let (a, b, c) = (m(a), m(b), m(c));
        prop_assert_eq!(h.convolve(&h.convolve(&a, &b), &c), h.convolve(&a, &h.convolve(&b, &c)));
    }
}
