use crate::hopfcore::check_hopf_morphism;
use crate::report::Report;
use crate::tensorcat::Mor;

use super::{BraceTriple, HopfBrace, PostHopfAlgebra};

/// `f` is a Hopf algebra morphism for both structures.
pub fn check_brace_morphism(f: &Mor, x: &HopfBrace, y: &HopfBrace) -> Report {
    let mut r = Report::new("Hopf brace morphism");
    r.absorb("H1", check_hopf_morphism(f, x.first(), y.first()));
    r.absorb("H2", check_hopf_morphism(f, x.second(), y.second()));
    r
}

/// `f` is a Hopf algebra morphism with `f∘γ = γ'∘(f⊗f)` and `f∘T = T'∘f`.
pub fn check_triple_morphism(f: &Mor, x: &BraceTriple, y: &BraceTriple) -> Report {
    let mut r = Report::new("brace triple morphism");
    let hm = check_hopf_morphism(f, x.hopf(), y.hopf());
    let typed = hm.clause("morphism.type").is_none();
    r.absorb("H", hm);
    if typed {
        r.equation("morphism.gamma", "f∘γ = γ'∘(f⊗f)", &f.after(x.gamma()), &y.gamma().after(&f.ox(f)));
        r.equation("morphism.t", "f∘T = T'∘f", &f.after(x.t()), &y.t().after(f));
    }
    r
}

/// `f` is a Hopf algebra morphism with `f∘m = m'∘(f⊗f)`.
pub fn check_post_hopf_morphism(f: &Mor, x: &PostHopfAlgebra, y: &PostHopfAlgebra) -> Report {
    let mut r = Report::new("post-Hopf morphism");
    let hm = check_hopf_morphism(f, x.hopf(), y.hopf());
    let typed = hm.clause("morphism.type").is_none();
    r.absorb("H", hm);
    if typed {
        r.equation("morphism.m", "f∘m = m'∘(f⊗f)", &f.after(x.m()), &y.m().after(&f.ox(f)));
    }
    r
}
