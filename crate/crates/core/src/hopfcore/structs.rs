use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg;
use crate::tensorcat::{braiding, braiding_inverse, coevaluation, evaluation, BraidingKind, Mor, Obj};

fn expect_type(m: &Mor, dom: &Obj, cod: &Obj) -> Result<()> {
    if m.dom() != dom {
        return Err(Error::DomainMismatch { expected: dom.clone(), found: m.dom().clone() });
    }
    if m.cod() != cod {
        return Err(Error::DomainMismatch { expected: cod.clone(), found: m.cod().clone() });
    }
    Ok(())
}

/// `(A, η, μ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraStruct {
    pub carrier: Obj,
    pub unit: Mor,
    pub mul: Mor,
}

impl AlgebraStruct {
    pub fn new(carrier: Obj, unit: Mor, mul: Mor) -> Result<Self> {
        expect_type(&unit, &Obj::unit(), &carrier)?;
        expect_type(&mul, &carrier.tensor(&carrier), &carrier)?;
        Ok(AlgebraStruct { carrier, unit, mul })
    }

    /// The algebra on `P* ⊗ P` with product `P* ⊗ b_P ⊗ P` and unit `a_P`.
    pub fn endomorphism_algebra(p: &Obj) -> AlgebraStruct {
        let ps = p.dual();
        let carrier = ps.tensor(p);
        let mul = Mor::identity(&ps).ox(&evaluation(p)).ox(&Mor::identity(p));
        AlgebraStruct {
            unit: coevaluation(p),
            mul: mul.relabel(&carrier.tensor(&carrier), &carrier),
            carrier,
        }
    }
}

/// `(D, ε, δ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalgebraStruct {
    pub carrier: Obj,
    pub counit: Mor,
    pub comul: Mor,
}

impl CoalgebraStruct {
    pub fn new(carrier: Obj, counit: Mor, comul: Mor) -> Result<Self> {
        expect_type(&counit, &carrier, &Obj::unit())?;
        expect_type(&comul, &carrier, &carrier.tensor(&carrier))?;
        Ok(CoalgebraStruct { carrier, counit, comul })
    }
}

/// A Hopf algebra candidate `(H, η, μ, ε, δ, λ)` over a chosen braiding.
///
/// Construction only checks that every map has the right type; the axioms are
/// checked by [`check_hopf`](crate::hopfcore::check_hopf).
#[derive(Debug, Clone)]
pub struct HopfAlgebra {
    carrier: Obj,
    braid: BraidingKind,
    unit: Mor,
    mul: Mor,
    counit: Mor,
    comul: Mor,
    antipode: Mor,
    antipode_inv: OnceLock<Option<Mor>>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.braid == other.braid
            && self.unit == other.unit
            && self.mul == other.mul
            && self.counit == other.counit
            && self.comul == other.comul
            && self.antipode == other.antipode
    }
}

impl HopfAlgebra {
    pub fn new(
        carrier: Obj,
        braid: BraidingKind,
        unit: Mor,
        mul: Mor,
        counit: Mor,
        comul: Mor,
        antipode: Mor,
    ) -> Result<Self> {
        let k = Obj::unit();
        let hh = carrier.tensor(&carrier);
        expect_type(&unit, &k, &carrier)?;
        expect_type(&mul, &hh, &carrier)?;
        expect_type(&counit, &carrier, &k)?;
        expect_type(&comul, &carrier, &hh)?;
        expect_type(&antipode, &carrier, &carrier)?;
        braiding(braid, &carrier, &carrier)?;
        Ok(HopfAlgebra {
            carrier,
            braid,
            unit,
            mul,
            counit,
            comul,
            antipode,
            antipode_inv: OnceLock::new(),
        })
    }

    pub fn carrier(&self) -> &Obj {
        &self.carrier
    }
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
    pub fn braid(&self) -> BraidingKind {
        self.braid
    }
    pub fn unit(&self) -> &Mor {
        &self.unit
    }
    pub fn mul(&self) -> &Mor {
        &self.mul
    }
    pub fn counit(&self) -> &Mor {
        &self.counit
    }
    pub fn comul(&self) -> &Mor {
        &self.comul
    }
    pub fn antipode(&self) -> &Mor {
        &self.antipode
    }

    pub fn id(&self) -> Mor {
        Mor::identity(&self.carrier)
    }

    /// `c_{H,H}`.
    pub fn c(&self) -> Mor {
        braiding(self.braid, &self.carrier, &self.carrier).expect("braiding checked at construction")
    }

    /// `c_{H,H}^{-1}`.
    pub fn c_inv(&self) -> Mor {
        braiding_inverse(self.braid, &self.carrier, &self.carrier).expect("braiding checked at construction")
    }

    /// `c_{X,Y}` for the structure's braiding kind.
    pub fn braid_of(&self, x: &Obj, y: &Obj) -> Mor {
        braiding(self.braid, x, y).expect("objects built from a graded carrier are graded")
    }

    /// `η ∘ ε`, the convolution unit of `H(H, H)`.
    pub fn unit_counit(&self) -> Mor {
        self.unit.after(&self.counit)
    }

    pub fn algebra(&self) -> AlgebraStruct {
        AlgebraStruct { carrier: self.carrier.clone(), unit: self.unit.clone(), mul: self.mul.clone() }
    }

    pub fn coalgebra(&self) -> CoalgebraStruct {
        CoalgebraStruct { carrier: self.carrier.clone(), counit: self.counit.clone(), comul: self.comul.clone() }
    }

    /// `f ∗ g = μ ∘ (f ⊗ g) ∘ δ` in `H(H, H)`.
    pub fn convolve(&self, f: &Mor, g: &Mor) -> Mor {
        self.mul.after(&f.ox(g)).after(&self.comul)
    }

    /// The matrix inverse of the antipode, computed once.
    pub fn antipode_inverse(&self) -> Result<&Mor> {
        self.antipode_inv
            .get_or_init(|| linalg::invert(&self.antipode).ok())
            .as_ref()
            .ok_or(Error::AntipodeNotInvertible)
    }

    pub fn with_mul(&self, mul: Mor) -> Result<HopfAlgebra> {
        HopfAlgebra::new(
            self.carrier.clone(),
            self.braid,
            self.unit.clone(),
            mul,
            self.counit.clone(),
            self.comul.clone(),
            self.antipode.clone(),
        )
    }

    pub fn with_antipode(&self, antipode: Mor) -> Result<HopfAlgebra> {
        HopfAlgebra::new(
            self.carrier.clone(),
            self.braid,
            self.unit.clone(),
            self.mul.clone(),
            self.counit.clone(),
            self.comul.clone(),
            antipode,
        )
    }
}

/// The co-opposite `(H, η, μ, ε, c^{-1} ∘ δ, λ^{-1})`, living over the inverse
/// braiding (the same kind, since built-in braidings are symmetries).
pub fn cop(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let inv = h.antipode_inverse()?.clone();
    let comul = h.c_inv().after(h.comul());
    HopfAlgebra::new(
        h.carrier().clone(),
        h.braid().inverse(),
        h.unit().clone(),
        h.mul().clone(),
        h.counit().clone(),
        comul,
        inv,
    )
}
