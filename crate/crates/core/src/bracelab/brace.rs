use crate::error::{Error, Result};
use crate::hopfcore::{check_hopf, check_module_algebra, is_cocommutative, HopfAlgebra};
use crate::report::Report;
use crate::tensorcat::{BraidingKind, Mor, Obj};

/// Two Hopf algebra structures `H₁ = (η¹, μ¹, λ¹)` and `H₂ = (η², μ², λ²)`
/// sharing the carrier, the braiding and the coalgebra `(ε, δ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfBrace {
    first: HopfAlgebra,
    second: HopfAlgebra,
}

impl HopfBrace {
    pub fn new(first: HopfAlgebra, second: HopfAlgebra) -> Result<HopfBrace> {
        if first.carrier() != second.carrier() {
            return Err(Error::DomainMismatch { expected: first.carrier().clone(), found: second.carrier().clone() });
        }
        if first.braid() != second.braid() {
            return Err(Error::InvalidInput("both structures must use the same braiding".into()));
        }
        if first.counit() != second.counit() || first.comul() != second.comul() {
            return Err(Error::InvalidInput("both structures must share ε and δ".into()));
        }
        Ok(HopfBrace { first, second })
    }

    pub fn first(&self) -> &HopfAlgebra {
        &self.first
    }
    pub fn second(&self) -> &HopfAlgebra {
        &self.second
    }
    pub fn carrier(&self) -> &Obj {
        self.first.carrier()
    }
    pub fn braid(&self) -> BraidingKind {
        self.first.braid()
    }
    pub fn counit(&self) -> &Mor {
        self.first.counit()
    }
    pub fn comul(&self) -> &Mor {
        self.first.comul()
    }

    /// See [`gamma_of_brace`].
    pub fn gamma(&self) -> Mor {
        gamma_of_brace(self)
    }

    /// Inverses of both antipodes, when they exist.
    pub fn s_witness(&self) -> Result<SHopfBraceWitness<'_>> {
        Ok(SHopfBraceWitness {
            brace: self,
            first_antipode_inverse: self.first.antipode_inverse()?.clone(),
            second_antipode_inverse: self.second.antipode_inverse()?.clone(),
        })
    }
}

/// A Hopf brace together with `(λ¹)⁻¹` and `(λ²)⁻¹`.
#[derive(Debug, Clone)]
pub struct SHopfBraceWitness<'a> {
    pub brace: &'a HopfBrace,
    pub first_antipode_inverse: Mor,
    pub second_antipode_inverse: Mor,
}

/// `Γ = μ¹∘(λ¹⊗μ²)∘(δ⊗H)`.
pub fn gamma_of_brace(b: &HopfBrace) -> Mor {
    let (h1, h2) = (b.first(), b.second());
    h1.mul().after(&h1.antipode().ox(h2.mul())).after(&b.comul().ox(&h1.id()))
}

/// Both Hopf algebra axiom sets (under `H1/` and `H2/`), the compatibility
/// law, the derived identities and the module algebra structure of `Γ`.
pub fn check_hopf_brace(b: &HopfBrace) -> Report {
    let mut r = Report::new(format!("Hopf brace on {}", b.carrier().name()));
    let (h1, h2) = (b.first(), b.second());
    r.absorb("H1", check_hopf(h1));
    r.absorb("H2", check_hopf(h2));
    let i = h1.id();
    let c = h1.c();
    let d = b.comul();
    let g = b.gamma();
    r.equation(
        "hopf_brace(iii)",
        "μ²∘(H⊗μ¹) = μ¹∘(μ²⊗Γ)∘(H⊗c⊗H)∘(δ⊗H⊗H)",
        &h2.mul().after(&i.ox(h1.mul())),
        &h1.mul().after(&h2.mul().ox(&g)).after(&i.ox(&c).ox(&i)).after(&d.ox(&i).ox(&i)),
    );
    r.equation("hopf_brace.units_agree", "η¹ = η²", h1.unit(), h2.unit());
    r.equation(
        "hopf_brace.second_product",
        "μ² = μ¹∘(H⊗Γ)∘(δ⊗H)",
        h2.mul(),
        &h1.mul().after(&i.ox(&g)).after(&d.ox(&i)),
    );
    r.equation(
        "hopf_brace.gamma_second_antipode",
        "Γ∘(H⊗λ²)∘δ = λ¹",
        &g.after(&i.ox(h2.antipode())).after(d),
        h1.antipode(),
    );
    r.equation(
        "hopf_brace.gamma_first_antipode",
        "Γ∘(H⊗λ¹) = μ¹∘((λ¹∘μ²)⊗H)∘(H⊗c)∘(δ⊗H)",
        &g.after(&i.ox(h1.antipode())),
        &h1.mul().after(&h1.antipode().after(h2.mul()).ox(&i)).after(&i.ox(&c)).after(&d.ox(&i)),
    );
    r.absorb("gamma", check_module_algebra(h2, &h1.algebra(), &g));
    let cocomm = is_cocommutative(h1);
    r.property("cocommutative", cocomm);
    if cocomm {
        append_coalgebra_morphism(
            &mut r,
            ["hopf_brace.gamma_comultiplicative", "hopf_brace.gamma_counit"],
            "Γ",
            h1,
            &g,
        );
    }
    r
}

/// `δ∘φ = (φ⊗φ)∘(H⊗c⊗H)∘(δ⊗δ)` and `ε∘φ = ε⊗ε` for `φ: H⊗H → H`.
pub(crate) fn append_coalgebra_morphism(r: &mut Report, keys: [&str; 2], name: &str, h: &HopfAlgebra, phi: &Mor) {
    let i = h.id();
    let d = h.comul();
    r.equation(
        keys[0],
        &format!("δ∘{name} = ({name}⊗{name})∘(H⊗c⊗H)∘(δ⊗δ)"),
        &d.after(phi),
        &phi.ox(phi).after(&i.ox(&h.c()).ox(&i)).after(&d.ox(d)),
    );
    r.equation(
        keys[1],
        &format!("ε∘{name} = ε⊗ε"),
        &h.counit().after(phi),
        &h.counit().ox(h.counit()),
    );
}

/// The Hopf brace clauses under `brace/` plus the conditions that make the
/// brace an s-Hopf brace.
pub fn check_s_hopf_brace(b: &HopfBrace) -> Report {
    let mut r = Report::new(format!("s-Hopf brace on {}", b.carrier().name()));
    r.absorb("brace", check_hopf_brace(b));
    let h1 = b.first();
    let h2 = b.second();
    let i = h1.id();
    let c = h1.c();
    let d = b.comul();
    let g = b.gamma();
    r.equation(
        "s_hopf_brace(i)",
        "(Γ⊗H)∘(H⊗c)∘(δ⊗H) = (Γ⊗H)∘(H⊗c)∘((c∘δ)⊗H)",
        &g.ox(&i).after(&i.ox(&c)).after(&d.ox(&i)),
        &g.ox(&i).after(&i.ox(&c)).after(&c.after(d).ox(&i)),
    );
    let witness = b.s_witness();
    r.condition(
        "s_hopf_brace(ii)",
        "λ¹ and λ² are isomorphisms",
        witness.is_ok(),
        witness.as_ref().err().map(|e| e.to_string()),
    );
    let l2 = h2.antipode();
    let act = |x: &Mor| h1.mul().after(&i.ox(&g)).after(&x.ox(&i));
    r.equation(
        "s_hopf_brace(ii.1)",
        "μ¹∘(H⊗Γ)∘((δ∘λ²)⊗H) = μ¹∘(H⊗Γ)∘(((λ²⊗λ²)∘δ)⊗H)",
        &act(&d.after(l2)),
        &act(&l2.ox(l2).after(d)),
    );
    match &witness {
        Ok(w) => {
            r.equation(
                "s_hopf_brace(ii.2)",
                "Γ∘(λ²⊗H)∘δ = (λ¹)⁻¹∘λ²",
                &g.after(&l2.ox(&i)).after(d),
                &w.first_antipode_inverse.after(l2),
            );
            r.equation(
                "s_hopf_brace.ii.2_dual_form",
                "Γ∘(H⊗(λ²)⁻¹)∘c⁻¹∘δ = (λ¹)⁻¹",
                &g.after(&i.ox(&w.second_antipode_inverse)).after(&h1.c_inv()).after(d),
                &w.first_antipode_inverse,
            );
        }
        Err(e) => {
            let note = Some(e.to_string());
            r.condition("s_hopf_brace(ii.2)", "Γ∘(λ²⊗H)∘δ = (λ¹)⁻¹∘λ²", false, note.clone());
            r.condition("s_hopf_brace.ii.2_dual_form", "Γ∘(H⊗(λ²)⁻¹)∘c⁻¹∘δ = (λ¹)⁻¹", false, note);
        }
    }
    r
}
