use std::sync::OnceLock;

use hopfbrace::bracelab::{check_brace_morphism, check_post_hopf_morphism, check_triple_morphism, HopfBrace};
use hopfbrace::exhibits::{hopf_brace_from_skew_brace, skew_brace_corpus, SkewBrace};
use hopfbrace::functors::{functor_g, functor_p};
use hopfbrace::tensorcat::Mor;
use proptest::prelude::*;

fn corpus() -> &'static [(SkewBrace, HopfBrace)] {
    static C: OnceLock<Vec<(SkewBrace, HopfBrace)>> = OnceLock::new();
    C.get_or_init(|| {
        skew_brace_corpus()
            .into_iter()
            .map(|(_, s)| {
                let b = hopf_brace_from_skew_brace(&s);
                (s, b)
            })
            .collect()
    })
}

fn pick() -> impl Strategy<Value = usize> {
    0..corpus().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // on a linearized skew brace, Γ(g ⊗ h) is the basis vector g⁻¹·(g⋆h)
    #[test]
    fn gamma_linearizes_the_set_action(i in pick()) {
        let (s, b) = &corpus()[i];
        let n = s.order();
        let gamma = b.gamma();
        let set = Mor::from_basis_map(gamma.dom(), gamma.cod(), |k| s.gamma(k / n, k % n));
        prop_assert_eq!(gamma, set);
    }

    #[test]
    fn cocommutative_triples_have_involutive_t(i in pick()) {
        let t = functor_g(&corpus()[i].1).unwrap();
        let h = t.hopf();
        prop_assert_eq!(t.t().after(t.t()), h.id());
    }

    // a bijection respecting both group laws is a morphism at every level
    #[test]
    fn brace_automorphisms_are_morphisms_everywhere(i in pick(), k in any::<prop::sample::Index>()) {
        let (s, b) = &corpus()[i];
        let autos: Vec<Vec<usize>> = s
            .dot()
            .automorphisms()
            .into_iter()
            .filter(|p| (0..s.order()).all(|x| (0..s.order()).all(|y| p[s.circ().mul(x, y)] == s.circ().mul(p[x], p[y]))))
            .collect();
        let p = &autos[k.index(autos.len())];
        let h = b.carrier();
        let f = Mor::from_basis_map(h, h, |x| p[x]);
        prop_assert!(check_brace_morphism(&f, b, b).all_passed());
        let t = functor_g(b).unwrap();
        prop_assert!(check_triple_morphism(&f, &t, &t).all_passed());
        let q = functor_p(&t).unwrap();
        prop_assert!(check_post_hopf_morphism(&f, &q, &q).all_passed());
    }

    // a bijection breaking the second law is caught
    #[test]
    fn non_brace_maps_are_rejected(i in pick(), k in any::<prop::sample::Index>()) {
        let (s, b) = &corpus()[i];
        let bad: Vec<Vec<usize>> = s
            .dot()
            .automorphisms()
            .into_iter()
            .filter(|p| !(0..s.order()).all(|x| (0..s.order()).all(|y| p[s.circ().mul(x, y)] == s.circ().mul(p[x], p[y]))))
            .collect();
        prop_assume!(!bad.is_empty());
        let p = &bad[k.index(bad.len())];
        let h = b.carrier();
        let f = Mor::from_basis_map(h, h, |x| p[x]);
        prop_assert!(!check_brace_morphism(&f, b, b).all_passed());
        let t = functor_g(b).unwrap();
        prop_assert!(!check_triple_morphism(&f, &t, &t).all_passed());
    }
}
