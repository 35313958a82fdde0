use crate::hopfcore::{AlgebraStruct, CoalgebraStruct, HopfAlgebra};
use crate::report::Report;
use crate::tensorcat::{braiding, BraidingKind, Mor, Obj};

fn id(x: &Obj) -> Mor {
    Mor::identity(x)
}

pub fn check_algebra(a: &AlgebraStruct) -> Report {
    let mut r = Report::new(format!("algebra on {}", a.carrier.name()));
    append_algebra(&mut r, a);
    r
}

fn append_algebra(r: &mut Report, a: &AlgebraStruct) {
    let i = id(&a.carrier);
    r.equation("algebra.unit_left", "μ∘(η⊗A) = id", &a.mul.after(&a.unit.ox(&i)), &i);
    r.equation("algebra.unit_right", "μ∘(A⊗η) = id", &a.mul.after(&i.ox(&a.unit)), &i);
    r.equation(
        "algebra.associativity",
        "μ∘(A⊗μ) = μ∘(μ⊗A)",
        &a.mul.after(&i.ox(&a.mul)),
        &a.mul.after(&a.mul.ox(&i)),
    );
}

pub fn check_coalgebra(d: &CoalgebraStruct) -> Report {
    let mut r = Report::new(format!("coalgebra on {}", d.carrier.name()));
    append_coalgebra(&mut r, d);
    r
}

fn append_coalgebra(r: &mut Report, d: &CoalgebraStruct) {
    let i = id(&d.carrier);
    r.equation("coalgebra.counit_left", "(ε⊗D)∘δ = id", &d.counit.ox(&i).after(&d.comul), &i);
    r.equation("coalgebra.counit_right", "(D⊗ε)∘δ = id", &i.ox(&d.counit).after(&d.comul), &i);
    r.equation(
        "coalgebra.coassociativity",
        "(δ⊗D)∘δ = (D⊗δ)∘δ",
        &d.comul.ox(&i).after(&d.comul),
        &i.ox(&d.comul).after(&d.comul),
    );
}

/// Algebra and coalgebra axioms plus multiplicativity of `ε` and `δ` with
/// respect to the braided tensor algebra.
pub fn check_bialgebra(a: &AlgebraStruct, d: &CoalgebraStruct, braid: BraidingKind) -> Report {
    let mut r = Report::new(format!("bialgebra on {}", a.carrier.name()));
    append_bialgebra(&mut r, a, d, braid);
    r
}

fn append_bialgebra(r: &mut Report, a: &AlgebraStruct, d: &CoalgebraStruct, braid: BraidingKind) {
    append_algebra(r, a);
    append_coalgebra(r, d);
    let h = &a.carrier;
    let i = id(h);
    let k = id(&Obj::unit());
    let c = match braiding(braid, h, h) {
        Ok(c) => c,
        Err(e) => {
            r.condition("bialgebra.braiding", "c_{H,H} is defined", false, Some(e.to_string()));
            return;
        }
    };
    r.equation("bialgebra.counit_unital", "ε∘η = id_K", &d.counit.after(&a.unit), &k);
    r.equation(
        "bialgebra.counit_multiplicative",
        "ε∘μ = ε⊗ε",
        &d.counit.after(&a.mul),
        &d.counit.ox(&d.counit),
    );
    r.equation("bialgebra.comul_unital", "δ∘η = η⊗η", &d.comul.after(&a.unit), &a.unit.ox(&a.unit));
    r.equation(
        "bialgebra.comul_multiplicative",
        "δ∘μ = (μ⊗μ)∘(H⊗c⊗H)∘(δ⊗δ)",
        &d.comul.after(&a.mul),
        &a.mul.ox(&a.mul).after(&i.ox(&c).ox(&i)).after(&d.comul.ox(&d.comul)),
    );
}

pub fn is_commutative(h: &HopfAlgebra) -> bool {
    h.mul().after(&h.c()) == *h.mul()
}

pub fn is_cocommutative(h: &HopfAlgebra) -> bool {
    h.c().after(h.comul()) == *h.comul()
}

pub fn check_cocommutative(h: &HopfAlgebra) -> Report {
    let mut r = Report::new(format!("cocommutativity of {}", h.carrier().name()));
    r.equation("hopf.cocommutative", "c∘δ = δ", &h.c().after(h.comul()), h.comul());
    r
}

/// Every Hopf algebra axiom plus the derived antipode identities.
///
/// When the structure is commutative or cocommutative the report also checks
/// `λ∘λ = id`; when cocommutative it checks `c∘c = id` on `H⊗H`.
pub fn check_hopf(h: &HopfAlgebra) -> Report {
    let mut r = Report::new(format!("Hopf algebra on {}", h.carrier().name()));
    append_bialgebra(&mut r, &h.algebra(), &h.coalgebra(), h.braid());
    let i = h.id();
    let lam = h.antipode();
    let c = h.c();
    let ue = h.unit_counit();
    r.equation("hopf.antipode_right", "id∗λ = η∘ε", &h.convolve(&i, lam), &ue);
    r.equation("hopf.antipode_left", "λ∗id = η∘ε", &h.convolve(lam, &i), &ue);
    r.equation(
        "hopf.antipode_antimultiplicative",
        "λ∘μ = μ∘(λ⊗λ)∘c",
        &lam.after(h.mul()),
        &h.mul().after(&lam.ox(lam)).after(&c),
    );
    r.equation(
        "hopf.antipode_anticomultiplicative",
        "δ∘λ = c∘(λ⊗λ)∘δ",
        &h.comul().after(lam),
        &c.after(&lam.ox(lam)).after(h.comul()),
    );
    r.equation("hopf.antipode_unit", "λ∘η = η", &lam.after(h.unit()), h.unit());
    r.equation("hopf.antipode_counit", "ε∘λ = ε", &h.counit().after(lam), h.counit());

    let comm = is_commutative(h);
    let cocomm = is_cocommutative(h);
    r.property("commutative", comm);
    r.property("cocommutative", cocomm);
    if comm || cocomm {
        r.equation("hopf.antipode_involutive", "λ∘λ = id", &lam.after(lam), &i);
    }
    if cocomm {
        let hh = h.carrier().tensor(h.carrier());
        r.equation("hopf.braiding_symmetric", "c∘c = id", &c.after(&c), &id(&hh));
    }
    r
}

/// `φ_{M⊗M} = (φ⊗φ)∘(X⊗c_{X,M}⊗M)∘(δ_X⊗M⊗M)`.
fn diagonal_action(x: &HopfAlgebra, m: &Obj, phi: &Mor) -> Mor {
    let ix = x.id();
    let im = id(m);
    phi.ox(phi)
        .after(&ix.ox(&x.braid_of(x.carrier(), m)).ox(&im))
        .after(&x.comul().ox(&im).ox(&im))
}

fn append_module(r: &mut Report, x: &HopfAlgebra, m: &Obj, phi: &Mor) {
    let ix = x.id();
    let im = id(m);
    r.equation("module.unit", "φ∘(η_X⊗M) = id", &phi.after(&x.unit().ox(&im)), &im);
    r.equation(
        "module.associativity",
        "φ∘(X⊗φ) = φ∘(μ_X⊗M)",
        &phi.after(&ix.ox(phi)),
        &phi.after(&x.mul().ox(&im)),
    );
}

fn type_ok(r: &mut Report, x: &HopfAlgebra, m: &Obj, phi: &Mor) -> bool {
    let ok = phi.dom() == &x.carrier().tensor(m) && phi.cod() == m;
    if !ok {
        r.condition("module.type", "φ: X⊗M → M", false, Some(format!("got {} -> {}", phi.dom(), phi.cod())));
    }
    ok
}

/// Left `X`-module algebra axioms for `(A, φ)`.
pub fn check_module_algebra(x: &HopfAlgebra, a: &AlgebraStruct, phi: &Mor) -> Report {
    let mut r = Report::new(format!("{}-module algebra {}", x.carrier().name(), a.carrier.name()));
    if !type_ok(&mut r, x, &a.carrier, phi) {
        return r;
    }
    append_module(&mut r, x, &a.carrier, phi);
    let ix = x.id();
    let fixes_unit = r.equation(
        "module_algebra.unit",
        "φ∘(X⊗η_A) = ε_X⊗η_A",
        &phi.after(&ix.ox(&a.unit)),
        &x.counit().ox(&a.unit),
    );
    r.equation(
        "module_algebra.multiplication",
        "φ∘(X⊗μ_A) = μ_A∘φ_{A⊗A}",
        &phi.after(&ix.ox(&a.mul)),
        &a.mul.after(&diagonal_action(x, &a.carrier, phi)),
    );
    r.property("unit_invariance", fixes_unit);
    r
}

/// Left `X`-module coalgebra axioms for `(D, φ)`.
pub fn check_module_coalgebra(x: &HopfAlgebra, d: &CoalgebraStruct, phi: &Mor) -> Report {
    let mut r = Report::new(format!("{}-module coalgebra {}", x.carrier().name(), d.carrier.name()));
    if !type_ok(&mut r, x, &d.carrier, phi) {
        return r;
    }
    append_module(&mut r, x, &d.carrier, phi);
    r.equation(
        "module_coalgebra.counit",
        "ε_D∘φ = ε_X⊗ε_D",
        &d.counit.after(phi),
        &x.counit().ox(&d.counit),
    );
    r.equation(
        "module_coalgebra.comultiplication",
        "δ_D∘φ = φ_{D⊗D}∘(X⊗δ_D)",
        &d.comul.after(phi),
        &diagonal_action(x, &d.carrier, phi).after(&x.id().ox(&d.comul)),
    );
    r
}

/// Whether `φ∘(X⊗η_H) = ε_X⊗η_H`. This follows whenever `φ` is a coalgebra
/// morphism that is multiplicative for the diagonal action.
pub fn action_fixes_unit(x: &HopfAlgebra, h: &HopfAlgebra, phi: &Mor) -> bool {
    phi.after(&x.id().ox(h.unit())) == x.counit().ox(h.unit())
}

/// `f: X → Y` is a Hopf algebra morphism: an algebra and coalgebra morphism.
/// The antipode compatibility `λ_Y∘f = f∘λ_X` is reported as a consequence.
pub fn check_hopf_morphism(f: &Mor, x: &HopfAlgebra, y: &HopfAlgebra) -> Report {
    let mut r = Report::new(format!("morphism {} → {}", x.carrier().name(), y.carrier().name()));
    if f.dom() != x.carrier() || f.cod() != y.carrier() {
        r.condition("morphism.type", "f: X → Y", false, Some(format!("got {} -> {}", f.dom(), f.cod())));
        return r;
    }
    r.equation("morphism.unit", "f∘η_X = η_Y", &f.after(x.unit()), y.unit());
    r.equation("morphism.multiplication", "f∘μ_X = μ_Y∘(f⊗f)", &f.after(x.mul()), &y.mul().after(&f.ox(f)));
    r.equation("morphism.counit", "ε_Y∘f = ε_X", &y.counit().after(f), x.counit());
    r.equation("morphism.comultiplication", "δ_Y∘f = (f⊗f)∘δ_X", &y.comul().after(f), &f.ox(f).after(x.comul()));
    r.equation("morphism.antipode", "λ_Y∘f = f∘λ_X", &y.antipode().after(f), &f.after(x.antipode()));
    r
}
