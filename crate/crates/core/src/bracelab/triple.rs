use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::hopfcore::{check_hopf, HopfAlgebra};
use crate::linalg;
use crate::report::Report;
use crate::tensorcat::{Mor, Obj};

use super::brace::append_coalgebra_morphism;

/// `(H, γ, T)`: a Hopf algebra with an action `γ: H⊗H → H` and a map `T: H → H`.
#[derive(Debug, Clone)]
pub struct BraceTriple {
    hopf: HopfAlgebra,
    gamma: Mor,
    t: Mor,
    t_inv: OnceLock<Result<Mor>>,
}

impl PartialEq for BraceTriple {
    fn eq(&self, other: &Self) -> bool {
        self.hopf == other.hopf && self.gamma == other.gamma && self.t == other.t
    }
}

impl BraceTriple {
    pub fn new(hopf: HopfAlgebra, gamma: Mor, t: Mor) -> Result<BraceTriple> {
        let h = hopf.carrier().clone();
        let hh = h.tensor(&h);
        for (m, dom) in [(&gamma, &hh), (&t, &h)] {
            if m.dom() != dom {
                return Err(Error::DomainMismatch { expected: dom.clone(), found: m.dom().clone() });
            }
            if m.cod() != &h {
                return Err(Error::DomainMismatch { expected: h.clone(), found: m.cod().clone() });
            }
        }
        Ok(BraceTriple { hopf, gamma, t, t_inv: OnceLock::new() })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }
    pub fn carrier(&self) -> &Obj {
        self.hopf.carrier()
    }
    pub fn gamma(&self) -> &Mor {
        &self.gamma
    }
    pub fn t(&self) -> &Mor {
        &self.t
    }

    pub fn t_inverse(&self) -> Result<&Mor> {
        self.t_inv.get_or_init(|| linalg::invert(&self.t)).as_ref().map_err(Clone::clone)
    }
}

/// All brace triple clauses plus `γ∘(H⊗η) = ε⊗η` and the equivalent form of
/// the last clause.
pub fn check_brace_triple(tr: &BraceTriple) -> Report {
    let mut r = Report::new(format!("brace triple on {}", tr.carrier().name()));
    let h = tr.hopf();
    r.absorb("H", check_hopf(h));
    let i = h.id();
    let c = h.c();
    let d = h.comul();
    let mu = h.mul();
    let g = tr.gamma();
    let t = tr.t();
    let lam = h.antipode();
    r.equation(
        "brace_triple(i)",
        "(γ⊗H)∘(H⊗c)∘(δ⊗H) = (γ⊗H)∘(H⊗c)∘((c∘δ)⊗H)",
        &g.ox(&i).after(&i.ox(&c)).after(&d.ox(&i)),
        &g.ox(&i).after(&i.ox(&c)).after(&c.after(d).ox(&i)),
    );
    append_coalgebra_morphism(&mut r, ["brace_triple(ii.1)", "brace_triple(ii.2)"], "γ", h, g);
    r.equation(
        "brace_triple(iii)",
        "γ∘(H⊗μ) = μ∘(γ⊗γ)∘(H⊗c⊗H)∘(δ⊗H⊗H)",
        &g.after(&i.ox(mu)),
        &mu.after(&g.ox(g)).after(&i.ox(&c).ox(&i)).after(&d.ox(&i).ox(&i)),
    );
    r.equation(
        "brace_triple(iv)",
        "γ∘(H⊗γ) = γ∘((μ∘(H⊗γ)∘(δ⊗H))⊗H)",
        &g.after(&i.ox(g)),
        &g.after(&mu.after(&i.ox(g)).after(&d.ox(&i)).ox(&i)),
    );
    r.equation("brace_triple(v)", "γ∘(η⊗H) = id", &g.after(&h.unit().ox(&i)), &i);
    let t_inv = tr.t_inverse();
    r.condition("brace_triple(vi)", "T is an isomorphism", t_inv.is_ok(), t_inv.as_ref().err().map(|e| e.to_string()));
    r.equation("brace_triple(vi.1)", "δ∘T = c∘(T⊗T)∘δ", &d.after(t), &c.after(&t.ox(t)).after(d));
    r.equation("brace_triple(vi.2)", "ε∘T = ε", &h.counit().after(t), h.counit());
    let act = |x: &Mor| mu.after(&i.ox(g)).after(&x.ox(&i));
    r.equation(
        "brace_triple(vi.3)",
        "μ∘(H⊗γ)∘((δ∘T)⊗H) = μ∘(H⊗γ)∘(((T⊗T)∘δ)⊗H)",
        &act(&d.after(t)),
        &act(&t.ox(t).after(d)),
    );
    r.equation("brace_triple(vi.4)", "γ∘(H⊗T)∘δ = λ", &g.after(&i.ox(t)).after(d), lam);
    let lam_inv = h.antipode_inverse();
    match (&lam_inv, &t_inv) {
        (Ok(li), Ok(ti)) => {
            r.equation("brace_triple(vi.5)", "γ∘(T⊗H)∘δ = λ⁻¹∘T", &g.after(&t.ox(&i)).after(d), &li.after(t));
            r.equation(
                "brace_triple.vi.5_dual_form",
                "γ∘(H⊗T⁻¹)∘c⁻¹∘δ = λ⁻¹",
                &g.after(&i.ox(ti)).after(&h.c_inv()).after(d),
                li,
            );
        }
        _ => {
            let note = lam_inv.err().or(t_inv.err()).map(|e| e.to_string());
            r.condition("brace_triple(vi.5)", "γ∘(T⊗H)∘δ = λ⁻¹∘T", false, note.clone());
            r.condition("brace_triple.vi.5_dual_form", "γ∘(H⊗T⁻¹)∘c⁻¹∘δ = λ⁻¹", false, note);
        }
    }
    r.equation(
        "brace_triple.gamma_unit_right",
        "γ∘(H⊗η) = ε⊗η",
        &g.after(&i.ox(h.unit())),
        &h.counit().ox(h.unit()),
    );
    r
}
