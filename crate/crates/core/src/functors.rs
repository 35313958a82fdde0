//! The functors between Hopf braces, brace triples and post-Hopf algebras, and
//! round-trip comparisons.

use serde::Serialize;

use crate::bracelab::{
    beta_closed_form, check_brace_triple, check_post_hopf, check_s_hopf_brace, check_star_condition, mu_bt,
    BraceTriple, HopfBrace, PostHopfAlgebra,
};
use crate::error::{Error, Result};
use crate::hopfcore::{is_cocommutative, HopfAlgebra};
use crate::report::Report;
use crate::tensorcat::Mor;

fn require(r: Report, what: &str) -> Result<()> {
    if r.all_passed() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("not a {what}; failing: {}", r.failed_keys().join(", "))))
    }
}

/// Brace triple to Hopf brace: `H₁ = H` and `H₂ = (η, μ∘(H⊗γ)∘(δ⊗H), ε, δ, T)`.
pub fn functor_f(t: &BraceTriple) -> Result<HopfBrace> {
    require(check_brace_triple(t), "brace triple")?;
    let h = t.hopf();
    let second = HopfAlgebra::new(
        h.carrier().clone(),
        h.braid(),
        h.unit().clone(),
        mu_bt(t),
        h.counit().clone(),
        h.comul().clone(),
        t.t().clone(),
    )?;
    HopfBrace::new(h.clone(), second)
}

/// s-Hopf brace to brace triple: `(H₁, Γ, λ²)`.
pub fn functor_g(b: &HopfBrace) -> Result<BraceTriple> {
    require(check_s_hopf_brace(b), "s-Hopf brace")?;
    BraceTriple::new(b.first().clone(), b.gamma(), b.second().antipode().clone())
}

/// Brace triple to post-Hopf algebra: `(H, γ)`, with `β = α∘T⁻¹`.
pub fn functor_p(t: &BraceTriple) -> Result<PostHopfAlgebra> {
    require(check_brace_triple(t), "brace triple")?;
    PostHopfAlgebra::with_beta(t.hopf().clone(), t.gamma().clone(), beta_closed_form(t)?)
}

/// Cocommutative post-Hopf algebra satisfying the `β̃` condition to Hopf
/// brace: `(H, (η, μ̂, ε, δ, λ̂))`.
pub fn functor_q(p: &PostHopfAlgebra) -> Result<HopfBrace> {
    require(check_post_hopf(p), "post-Hopf algebra")?;
    let h = p.hopf();
    if !is_cocommutative(h) {
        return Err(Error::InvalidInput("Q needs a cocommutative Hopf algebra".into()));
    }
    if !check_star_condition(p).all_passed() {
        return Err(Error::StarConditionFailed);
    }
    let second = HopfAlgebra::new(
        h.carrier().clone(),
        h.braid(),
        h.unit().clone(),
        p.mu_hat(),
        h.counit().clone(),
        h.comul().clone(),
        p.lambda_hat()?,
    )?;
    HopfBrace::new(h.clone(), second)
}

/// Which composite a round trip applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RoundTrip {
    /// `G∘F` on a brace triple.
    #[serde(rename = "G∘F")]
    GF,
    /// `F∘G` on an s-Hopf brace.
    #[serde(rename = "F∘G")]
    FG,
    /// `P∘G∘Q` on a post-Hopf algebra.
    #[serde(rename = "P∘G∘Q")]
    PGQ,
    /// `G∘Q∘P` on a brace triple.
    #[serde(rename = "G∘Q∘P")]
    GQP,
}

impl RoundTrip {
    pub fn as_str(self) -> &'static str {
        match self {
            RoundTrip::GF => "G∘F",
            RoundTrip::FG => "F∘G",
            RoundTrip::PGQ => "P∘G∘Q",
            RoundTrip::GQP => "G∘Q∘P",
        }
    }
}

/// Field-by-field comparison of a structure with its image under a composite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundTripReport {
    pub direction: RoundTrip,
    pub fields: Report,
}

impl RoundTripReport {
    pub fn identical(&self) -> bool {
        self.fields.all_passed()
    }
}

fn compare(r: &mut Report, prefix: &str, fields: &[(&str, &Mor, &Mor)]) {
    for (name, before, after) in fields {
        r.equation(&format!("{prefix}{name}"), &format!("{name} is unchanged"), after, before);
    }
}

fn compare_hopf(r: &mut Report, prefix: &str, a: &HopfAlgebra, b: &HopfAlgebra) {
    compare(
        r,
        prefix,
        &[
            ("eta", a.unit(), b.unit()),
            ("mu", a.mul(), b.mul()),
            ("eps", a.counit(), b.counit()),
            ("delta", a.comul(), b.comul()),
            ("lambda", a.antipode(), b.antipode()),
        ],
    );
    r.condition(&format!("{prefix}braiding"), "braiding is unchanged", a.braid() == b.braid(), None);
}

fn compare_triples(r: &mut Report, a: &BraceTriple, b: &BraceTriple) {
    compare_hopf(r, "", a.hopf(), b.hopf());
    compare(r, "", &[("gamma", a.gamma(), b.gamma()), ("T", a.t(), b.t())]);
}

pub fn roundtrip_gf(t: &BraceTriple) -> Result<RoundTripReport> {
    let back = functor_g(&functor_f(t)?)?;
    let mut fields = Report::new("G∘F");
    compare_triples(&mut fields, t, &back);
    Ok(RoundTripReport { direction: RoundTrip::GF, fields })
}

pub fn roundtrip_fg(b: &HopfBrace) -> Result<RoundTripReport> {
    let back = functor_f(&functor_g(b)?)?;
    let mut fields = Report::new("F∘G");
    compare_hopf(&mut fields, "H1.", b.first(), back.first());
    compare_hopf(&mut fields, "H2.", b.second(), back.second());
    Ok(RoundTripReport { direction: RoundTrip::FG, fields })
}

pub fn roundtrip_pgq(p: &PostHopfAlgebra) -> Result<RoundTripReport> {
    let back = functor_p(&functor_g(&functor_q(p)?)?)?;
    let mut fields = Report::new("P∘G∘Q");
    compare_hopf(&mut fields, "", p.hopf(), back.hopf());
    compare(&mut fields, "", &[("m", p.m(), back.m())]);
    Ok(RoundTripReport { direction: RoundTrip::PGQ, fields })
}

pub fn roundtrip_gqp(t: &BraceTriple) -> Result<RoundTripReport> {
    let back = functor_g(&functor_q(&functor_p(t)?)?)?;
    let mut fields = Report::new("G∘Q∘P");
    compare_triples(&mut fields, t, &back);
    Ok(RoundTripReport { direction: RoundTrip::GQP, fields })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracelab::{check_hopf_brace, check_post_hopf, check_star_condition, gamma_of_brace};
    use crate::exhibits::{
        group_algebra, hopf_brace_from_skew_brace, super_line, sweedler, trivial_post_hopf, trivial_triple,
        FiniteGroup, SkewBrace,
    };
    use crate::scalar::Scalar;
    use crate::tensorcat::{BraidingKind, Obj};

    fn s3_opposite() -> HopfBrace {
        hopf_brace_from_skew_brace(&SkewBrace::opposite(&FiniteGroup::symmetric3()))
    }

    fn opposite_table(g: &FiniteGroup) -> Mor {
        let n = g.order();
        let h = Obj::new("H", n);
        Mor::from_basis_map(&h.tensor(&h), &h, |k| g.mul(k % n, k / n))
    }

    #[test]
    fn f_of_trivial_triple_is_trivial_brace() {
        for h in [super_line(), sweedler()] {
            let b = functor_f(&trivial_triple(&h)).unwrap();
            assert_eq!(b.first().mul(), b.second().mul());
            assert!(check_s_hopf_brace(&b).all_passed());
        }
    }

    #[test]
    fn g_of_s3_brace_is_conjugation_triple() {
        let g = FiniteGroup::symmetric3();
        let t = functor_g(&s3_opposite()).unwrap();
        let inv = Mor::from_basis_map(t.carrier(), t.carrier(), |x| g.inv(x));
        assert_eq!(t.t(), &inv);
        let b = functor_f(&t).unwrap();
        assert_eq!(b.second().mul(), &opposite_table(&g));
        assert_eq!(&gamma_of_brace(&b), t.gamma());
    }

    #[test]
    fn p_and_q_on_s3() {
        let g = FiniteGroup::symmetric3();
        let t = functor_g(&s3_opposite()).unwrap();
        let p = functor_p(&t).unwrap();
        assert_eq!(p.m(), t.gamma());
        assert!(check_post_hopf(&p).all_passed());
        assert!(check_star_condition(&p).all_passed());
        let b = functor_q(&p).unwrap();
        assert_eq!(b.second().mul(), &opposite_table(&g));
        assert_eq!(&b.gamma(), p.m());
        assert!(check_hopf_brace(&b).all_passed());
    }

    #[test]
    fn round_trips_on_s3() {
        let b = s3_opposite();
        let t = functor_g(&b).unwrap();
        for rt in [
            roundtrip_fg(&b).unwrap(),
            roundtrip_gf(&t).unwrap(),
            roundtrip_gqp(&t).unwrap(),
            roundtrip_pgq(&functor_p(&t).unwrap()).unwrap(),
        ] {
            assert!(rt.identical(), "{}\n{}", rt.direction.as_str(), rt.fields);
        }
    }

    #[test]
    fn round_trip_on_non_cocommutative_triple() {
        let rt = roundtrip_gf(&trivial_triple(&sweedler())).unwrap();
        assert!(rt.identical());
    }

    #[test]
    fn q_refuses_non_cocommutative() {
        let p = trivial_post_hopf(&sweedler());
        assert!(matches!(functor_q(&p), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn functors_refuse_invalid_input() {
        let h = group_algebra(&FiniteGroup::cyclic(3), BraidingKind::Flip).unwrap();
        let bad = BraceTriple::new(h.clone(), h.mul().clone(), h.antipode().clone()).unwrap();
        assert!(matches!(functor_f(&bad), Err(Error::InvalidInput(_))));
        assert!(matches!(functor_p(&bad), Err(Error::InvalidInput(_))));
        let doubled = PostHopfAlgebra::new(h.clone(), h.counit().ox(&h.id()).scale(&Scalar::from(2))).unwrap();
        assert!(functor_q(&doubled).is_err());
    }
}
