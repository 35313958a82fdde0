use crate::bracelab::{BraceTriple, PostHopfAlgebra};
use crate::hopfcore::HopfAlgebra;
use crate::tensorcat::Mor;

use super::group::FiniteGroup;
use super::skew::{enumerate_skew_braces, SkewBrace, ENUMERATION_BOUND};
use super::linearize::{super_line, sweedler};

/// `(H, ε⊗id, λ)`.
pub fn trivial_triple(h: &HopfAlgebra) -> BraceTriple {
    BraceTriple::new(h.clone(), trivial_action(h), h.antipode().clone()).expect("well typed")
}

/// `(H, ε⊗id)`.
pub fn trivial_post_hopf(h: &HopfAlgebra) -> PostHopfAlgebra {
    PostHopfAlgebra::new(h.clone(), trivial_action(h)).expect("well typed")
}

fn trivial_action(h: &HopfAlgebra) -> Mor {
    h.counit().ox(&h.id())
}

/// Trivial and opposite skew braces on every built-in group, followed by the
/// enumerated skew braces on every built-in group of order at most the
/// enumeration bound. Labels are `group/family`; duplicates are dropped.
pub fn skew_brace_corpus() -> Vec<(String, SkewBrace)> {
    let mut out: Vec<(String, SkewBrace)> = Vec::new();
    let mut push = |label: String, s: SkewBrace| {
        if !out.iter().any(|(_, t)| t.same_tables(&s)) {
            out.push((label, s));
        }
    };
    for g in FiniteGroup::builtin() {
        push(format!("{}/trivial", g.name()), SkewBrace::trivial(&g));
        push(format!("{}/opposite", g.name()), SkewBrace::opposite(&g));
    }
    for g in FiniteGroup::builtin().into_iter().filter(|g| g.order() <= ENUMERATION_BOUND) {
        for (i, s) in enumerate_skew_braces(&g).expect("within bound").into_iter().enumerate() {
            push(format!("{}/enumerated#{i}", g.name()), s);
        }
    }
    out
}

/// Hopf algebras beyond group algebras: the super line and Sweedler's algebra.
pub fn extra_hopf_algebras() -> Vec<(String, HopfAlgebra)> {
    vec![("super_line".into(), super_line()), ("sweedler".into(), sweedler())]
}
