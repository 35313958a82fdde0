use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::hopfcore::{check_hopf, is_cocommutative, AlgebraStruct, ConvolutionContext, HopfAlgebra};
use crate::report::Report;
use crate::tensorcat::{coevaluation, evaluation, Mor, Obj};

use super::brace::append_coalgebra_morphism;
use super::triple::BraceTriple;

/// `(H, m)` with `m: H⊗H → H`.
#[derive(Debug, Clone)]
pub struct PostHopfAlgebra {
    hopf: HopfAlgebra,
    m: Mor,
    beta: OnceLock<Result<Mor>>,
}

impl PartialEq for PostHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.hopf == other.hopf && self.m == other.m
    }
}

impl PostHopfAlgebra {
    pub fn new(hopf: HopfAlgebra, m: Mor) -> Result<PostHopfAlgebra> {
        let h = hopf.carrier();
        if m.dom() != &h.tensor(h) {
            return Err(Error::DomainMismatch { expected: h.tensor(h), found: m.dom().clone() });
        }
        if m.cod() != h {
            return Err(Error::DomainMismatch { expected: h.clone(), found: m.cod().clone() });
        }
        Ok(PostHopfAlgebra { hopf, m, beta: OnceLock::new() })
    }

    /// Like [`new`](Self::new) but with a known convolution inverse of `α`.
    /// The candidate is verified before it is cached.
    pub fn with_beta(hopf: HopfAlgebra, m: Mor, beta: Mor) -> Result<PostHopfAlgebra> {
        let p = PostHopfAlgebra::new(hopf, m)?;
        let ctx = p.convolution_context();
        let alpha = p.alpha();
        let unit = ctx.unit();
        if ctx.convolve(&alpha, &beta)? != unit || ctx.convolve(&beta, &alpha)? != unit {
            return Err(Error::BetaUnavailable("supplied β is not a convolution inverse of α".into()));
        }
        p.beta.set(Ok(beta)).expect("fresh cell");
        Ok(p)
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }
    pub fn carrier(&self) -> &Obj {
        self.hopf.carrier()
    }
    pub fn m(&self) -> &Mor {
        &self.m
    }

    /// `H(H, H*⊗H)` with the product `H*⊗b⊗H`.
    pub fn convolution_context(&self) -> ConvolutionContext {
        ConvolutionContext::new(self.hopf.coalgebra(), AlgebraStruct::endomorphism_algebra(self.carrier()))
    }

    /// `α = (H*⊗m)∘(c_{H,H*}⊗H)∘(H⊗a_H)`.
    pub fn alpha(&self) -> Mor {
        alpha_of(&self.hopf, &self.m)
    }

    /// The convolution inverse of `α`, solved for once.
    pub fn beta(&self) -> Result<&Mor> {
        self.beta
            .get_or_init(|| {
                self.convolution_context()
                    .inverse(&self.alpha())
                    .map_err(|e| Error::BetaUnavailable(e.to_string()))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `μ̂ = μ∘(H⊗m)∘(δ⊗H)`.
    pub fn mu_hat(&self) -> Mor {
        sub_product(&self.hopf, &self.m)
    }

    /// `λ̂ = (b⊗H)∘(c_{H*,H}⊗H)∘(H*⊗c)∘(β⊗λ)∘δ`.
    pub fn lambda_hat(&self) -> Result<Mor> {
        let h = &self.hopf;
        let hs = self.carrier().dual();
        let i = h.id();
        Ok(evaluation(self.carrier())
            .ox(&i)
            .after(&h.braid_of(&hs, self.carrier()).ox(&i))
            .after(&Mor::identity(&hs).ox(&h.c()))
            .after(&self.beta()?.ox(h.antipode()))
            .after(h.comul()))
    }

    /// `(b⊗H)∘(λ⊗β)∘δ`, which agrees with [`lambda_hat`](Self::lambda_hat)
    /// when `H` is cocommutative.
    pub fn lambda_hat_cocommutative(&self) -> Result<Mor> {
        let h = &self.hopf;
        Ok(evaluation(self.carrier()).ox(&h.id()).after(&h.antipode().ox(self.beta()?)).after(h.comul()))
    }

    /// `α̃ = (b⊗H)∘(H⊗α)`.
    pub fn alpha_tilde(&self) -> Mor {
        tilde(&self.hopf, &self.alpha())
    }

    /// `β̃ = (b⊗H)∘(H⊗β)`.
    pub fn beta_tilde(&self) -> Result<Mor> {
        Ok(tilde(&self.hopf, self.beta()?))
    }
}

fn tilde(h: &HopfAlgebra, f: &Mor) -> Mor {
    evaluation(h.carrier()).ox(&h.id()).after(&h.id().ox(f))
}

/// `α = (H*⊗m)∘(c_{H,H*}⊗H)∘(H⊗a_H)` for any `m: H⊗H → H`.
pub fn alpha_of(h: &HopfAlgebra, m: &Mor) -> Mor {
    let x = h.carrier();
    let xs = x.dual();
    let i = h.id();
    Mor::identity(&xs)
        .ox(m)
        .after(&h.braid_of(x, &xs).ox(&i))
        .after(&i.ox(&coevaluation(x)))
        .relabel(x, &xs.tensor(x))
}

/// `μ∘(H⊗φ)∘(δ⊗H)`.
pub fn sub_product(h: &HopfAlgebra, phi: &Mor) -> Mor {
    h.mul().after(&h.id().ox(phi)).after(&h.comul().ox(&h.id()))
}

/// `μ^T = μ∘(H⊗γ)∘(δ⊗H)`.
pub fn mu_bt(t: &BraceTriple) -> Mor {
    sub_product(t.hopf(), t.gamma())
}

/// `β = α∘T⁻¹` with `α` built from `γ`.
pub fn beta_closed_form(t: &BraceTriple) -> Result<Mor> {
    Ok(alpha_of(t.hopf(), t.gamma()).after(t.t_inverse()?))
}

/// All post-Hopf clauses plus the derived identities for `m`.
pub fn check_post_hopf(p: &PostHopfAlgebra) -> Report {
    let mut r = Report::new(format!("post-Hopf algebra on {}", p.carrier().name()));
    let h = p.hopf();
    r.absorb("H", check_hopf(h));
    let i = h.id();
    let c = h.c();
    let d = h.comul();
    let mu = h.mul();
    let m = p.m();
    append_coalgebra_morphism(&mut r, ["post_hopf(i.1)", "post_hopf(i.2)"], "m", h, m);
    r.equation(
        "post_hopf(ii)",
        "m∘(H⊗m) = m∘((μ∘(H⊗m)∘(δ⊗H))⊗H)",
        &m.after(&i.ox(m)),
        &m.after(&p.mu_hat().ox(&i)),
    );
    r.equation(
        "post_hopf(iii)",
        "m∘(H⊗μ) = μ∘(m⊗m)∘(H⊗c⊗H)∘(δ⊗H⊗H)",
        &m.after(&i.ox(mu)),
        &mu.after(&m.ox(m)).after(&i.ox(&c).ox(&i)).after(&d.ox(&i).ox(&i)),
    );
    let stmt = "α is convolution invertible";
    match p.beta() {
        Ok(beta) => {
            let ctx = p.convolution_context();
            let alpha = p.alpha();
            let unit = ctx.unit();
            let both = ctx.convolve(&alpha, beta).ok() == Some(unit.clone())
                && ctx.convolve(beta, &alpha).ok() == Some(unit);
            r.condition("post_hopf(iv)", stmt, both, (!both).then(|| "β fails an inverse identity".into()));
        }
        Err(e) => {
            r.condition("post_hopf(iv)", stmt, false, Some(e.to_string()));
        }
    }
    r.equation("post_hopf.m_unit_right", "m∘(H⊗η) = ε⊗η", &m.after(&i.ox(h.unit())), &h.counit().ox(h.unit()));
    r.equation("post_hopf.m_unit_left", "m∘(η⊗H) = id", &m.after(&h.unit().ox(&i)), &i);
    let rebuilt = evaluation(p.carrier()).ox(&i).after(&i.ox(&p.alpha()));
    r.equation("post_hopf.alpha_recovers_m_braided", "m∘c⁻¹ = (b⊗H)∘(H⊗α)", &m.after(&h.c_inv()), &rebuilt);
    r.equation("post_hopf.alpha_recovers_m", "m = (b⊗H)∘(H⊗α)∘c", m, &rebuilt.after(&c));
    r
}

/// The condition that `β̃` is comultiplicative, with the counit companion and,
/// in the cocommutative case, the coalgebra morphism property of `α̃`.
pub fn check_star_condition(p: &PostHopfAlgebra) -> Report {
    let mut r = Report::new(format!("β̃ condition on {}", p.carrier().name()));
    let h = p.hopf();
    match p.beta_tilde() {
        Ok(bt) => {
            let i = h.id();
            let d = h.comul();
            r.equation(
                "post_hopf.star",
                "δ∘β̃ = (β̃⊗β̃)∘(H⊗c⊗H)∘(δ⊗δ)",
                &d.after(&bt),
                &bt.ox(&bt).after(&i.ox(&h.c()).ox(&i)).after(&d.ox(d)),
            );
            r.equation("post_hopf.beta_tilde_counit", "ε∘β̃ = ε⊗ε", &h.counit().after(&bt), &h.counit().ox(h.counit()));
        }
        Err(e) => {
            r.condition("post_hopf.star", "δ∘β̃ = (β̃⊗β̃)∘(H⊗c⊗H)∘(δ⊗δ)", false, Some(e.to_string()));
        }
    }
    if is_cocommutative(h) {
        append_coalgebra_morphism(
            &mut r,
            ["post_hopf.alpha_tilde_comultiplicative", "post_hopf.alpha_tilde_counit"],
            "α̃",
            h,
            &p.alpha_tilde(),
        );
    }
    r
}

/// Identities for `λ̂` relative to the subadjacent product `μ̂`.
///
/// The comultiplicativity, involutivity and left inverse clauses are expected
/// to hold when `H` is cocommutative and `post_hopf.star` holds; the report
/// records both facts as properties.
pub fn check_lambda_hat(p: &PostHopfAlgebra) -> Report {
    let mut r = Report::new(format!("λ̂ on {}", p.carrier().name()));
    let h = p.hopf();
    let cocomm = is_cocommutative(h);
    r.property("cocommutative", cocomm);
    r.property("star", check_star_condition(p).all_passed());
    let lh = match p.lambda_hat() {
        Ok(l) => l,
        Err(e) => {
            r.condition("lambda_hat.defined", "β exists", false, Some(e.to_string()));
            return r;
        }
    };
    let i = h.id();
    let d = h.comul();
    let ue = h.unit_counit();
    let mh = p.mu_hat();
    if cocomm {
        if let Ok(alt) = p.lambda_hat_cocommutative() {
            r.equation("lambda_hat.cocommutative_form", "λ̂ = (b⊗H)∘(λ⊗β)∘δ", &lh, &alt);
        }
    }
    r.equation("lambda_hat.m_antipode", "m∘(H⊗λ̂)∘δ = λ", &p.m().after(&i.ox(&lh)).after(d), h.antipode());
    r.equation("lambda_hat.right_inverse", "id ∗̂ λ̂ = η∘ε", &mh.after(&i.ox(&lh)).after(d), &ue);
    r.equation("lambda_hat.counit", "ε∘λ̂ = ε", &h.counit().after(&lh), h.counit());
    r.equation("lambda_hat.comultiplicative", "δ∘λ̂ = (λ̂⊗λ̂)∘δ", &d.after(&lh), &lh.ox(&lh).after(d));
    r.equation("lambda_hat.involutive", "λ̂∘λ̂ = id", &lh.after(&lh), &i);
    r.equation("lambda_hat.left_inverse", "λ̂ ∗̂ id = η∘ε", &mh.after(&lh.ox(&i)).after(d), &ue);
    r
}
