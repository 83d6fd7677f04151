//! Generalized invertible 1-cocycles and their equivalence with Hopf trusses.

use crate::coalgebra::{
    expect_shape, find_unit, id, solve_antipode, ComonoidData, HopfMonoidData, NonUnitalBimonoidData,
};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::hopftruss::{module_monoid_laws, verify_hopf_truss, HopfTruss};
use crate::linalg::LinMap;
use crate::report::{Residual, VerificationReport};

/// A comonoid isomorphism `π: B → H` from a non-unital bimonoid to a Hopf
/// monoid, with a comonoid endomorphism `θ` of `B` and an action `φ_H` of `B`
/// on `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gic<K: Field> {
    pub b: NonUnitalBimonoidData<K>,
    pub h: HopfMonoidData<K>,
    pub pi: LinMap<K>,
    pub theta: LinMap<K>,
    /// `B ⊗ H → H`
    pub phi_h: LinMap<K>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GicMorphism<K: Field> {
    /// `B → B'`
    pub f: LinMap<K>,
    /// `H → H'`
    pub g: LinMap<K>,
}

impl<K: Field> Gic<K> {
    pub fn ctx(&self) -> &K::Ctx {
        self.b.ctx()
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.b.check_shapes()?;
        self.h.check_shapes()?;
        let ctx = self.ctx();
        let (bd, hd) = (self.b.dim(), self.h.dim());
        expect_shape("H structure", &self.h.mu, ctx, hd, hd * hd)?;
        expect_shape("pi", &self.pi, ctx, hd, bd)?;
        expect_shape("theta", &self.theta, ctx, bd, bd)?;
        expect_shape("phi_h", &self.phi_h, ctx, hd, bd * hd)
    }

    /// `π∘θ`, the map through which `B` multiplies into `H`.
    fn pi_theta(&self) -> LinMap<K> {
        &self.pi * &self.theta
    }

    /// Transports the cocycle along an invertible `α: B' → B`, producing an
    /// isomorphic cocycle on `B'` with `(α, id_H)` an isomorphism onto `self`.
    pub fn transport(&self, alpha: &LinMap<K>) -> Result<Self> {
        self.check_shapes()?;
        let d = self.b.dim();
        expect_shape("alpha", alpha, self.ctx(), d, d)?;
        let inv = alpha.invert()?;
        let c = &self.b.comonoid;
        Ok(Gic {
            b: NonUnitalBimonoidData {
                comonoid: ComonoidData {
                    dim: d,
                    delta: &inv.tensor(&inv) * &(&c.delta * alpha),
                    epsilon: &c.epsilon * alpha,
                },
                mu: &inv * &(&self.b.mu * &alpha.tensor(alpha)),
            },
            h: self.h.clone(),
            pi: &self.pi * alpha,
            theta: &inv * &(&self.theta * alpha),
            phi_h: &self.phi_h * &alpha.tensor(&id(self.ctx(), self.h.dim())),
        })
    }
}

pub(crate) fn record_invertible<K: Field>(r: &mut VerificationReport, name: &str, anchor: &str, m: &LinMap<K>) {
    let pass = m.cod() == m.dom() && m.invert().is_ok();
    r.record(
        name,
        anchor,
        pass,
        (!pass).then(|| Residual::Message(format!("rank {} of a {}x{} map", m.rank(), m.cod(), m.dom()))),
    );
}

pub fn verify_gic<K: Field>(c: &Gic<K>) -> Result<VerificationReport> {
    c.check_shapes()?;
    let mut r = VerificationReport::new();
    r.absorb("b.", c.b.verify()?);
    r.absorb("h.", c.h.verify()?);
    c.b.comonoid.morphism_laws(&c.h.comonoid, &c.pi, "pi.", &mut r);
    record_invertible(&mut r, "pi.invertible", "Def.1-cocy", &c.pi);
    c.b.comonoid.morphism_laws(&c.b.comonoid, &c.theta, "theta.", &mut r);
    module_monoid_laws(&c.b, &c.h.eta, &c.h.mu, &c.phi_h, "phi_h.", &mut r);
    let rhs = &c.h.mu * &(&c.pi_theta().tensor(&c.phi_h) * &c.b.comonoid.delta.tensor(&c.pi));
    r.equal("one_cocycle", "Eq.(1-c)", &(&c.pi * &c.b.mu), &rhs);
    r.flag("invertible_1_cocycle", is_invertible_1_cocycle(c));
    Ok(r)
}

/// Whether `c` lies in the subcategory of invertible 1-cocycles: `θ = id`,
/// `B` is a Hopf monoid and `φ_H` is a unital action.
fn is_invertible_1_cocycle<K: Field>(c: &Gic<K>) -> bool {
    if !c.theta.is_identity() {
        return false;
    }
    let Ok(Some(eta_b)) = find_unit(c.ctx(), c.b.dim(), &c.b.mu) else {
        return false;
    };
    solve_antipode(&c.b, &eta_b).is_ok() && (&c.phi_h * &eta_b.tensor(&id(c.ctx(), c.h.dim()))).is_identity()
}

/// `E(h) = (id: H₂ → H₁, σ)` with action `Γ`.
pub fn functor_e<K: Field>(h: &HopfTruss<K>) -> Result<Gic<K>> {
    if !verify_hopf_truss(h)?.passed() {
        return Err(AlgebraError::Invalid("E needs a valid Hopf truss".into()));
    }
    Ok(Gic {
        b: h.h2(),
        h: h.h1(),
        pi: id(h.ctx(), h.dim()),
        theta: h.sigma.clone(),
        phi_h: h.gamma_action(),
    })
}

/// `Q(c)`: the Hopf truss on `H` with `μ² = π∘μ_B∘(π⁻¹⊗π⁻¹)` and `σ = π∘θ∘π⁻¹`.
pub fn functor_q<K: Field>(c: &Gic<K>) -> Result<HopfTruss<K>> {
    if !verify_gic(c)?.passed() {
        return Err(AlgebraError::Invalid("Q needs a valid generalized 1-cocycle".into()));
    }
    let inv = c.pi.invert()?;
    HopfTruss::new(
        c.h.comonoid.clone(),
        c.h.eta.clone(),
        c.h.mu.clone(),
        &c.pi * &(&c.b.mu * &inv.tensor(&inv)),
        c.h.lambda.clone(),
        &c.pi * &(&c.theta * &inv),
    )
}

pub fn verify_gic_morphism<K: Field>(m: &GicMorphism<K>, src: &Gic<K>, dst: &Gic<K>) -> Result<VerificationReport> {
    src.check_shapes()?;
    dst.check_shapes()?;
    let ctx = src.ctx();
    expect_shape("f", &m.f, ctx, dst.b.dim(), src.b.dim())?;
    expect_shape("g", &m.g, ctx, dst.h.dim(), src.h.dim())?;
    let mut r = VerificationReport::new();
    src.b.morphism_laws(&dst.b, &m.f, "f.", &mut r);
    src.h.morphism_laws(&dst.h, &m.g, "g.", &mut r);
    r.equal(
        "theta_intertwining",
        "Eq.(1-c1)",
        &(&m.f * &src.theta),
        &(&dst.theta * &m.f),
    );
    r.equal("pi_intertwining", "Eq.(1-c2)", &(&m.g * &src.pi), &(&dst.pi * &m.f));
    r.equal(
        "action_intertwining",
        "Eq.(1-c3)",
        &(&m.g * &src.phi_h),
        &(&dst.phi_h * &m.f.tensor(&m.g)),
    );
    Ok(r)
}

/// Certifies `(π, id_H): c → E(Q(c))` as an isomorphism of cocycles and checks
/// that the action of `Q(c)` recovers `φ_H` along `π`.
pub fn roundtrip_report<K: Field>(c: &Gic<K>) -> Result<VerificationReport> {
    let q = functor_q(c)?;
    let e = functor_e(&q)?;
    let iso = GicMorphism {
        f: c.pi.clone(),
        g: id(c.ctx(), c.h.dim()),
    };
    let mut r = VerificationReport::new();
    r.absorb("iso.", verify_gic_morphism(&iso, c, &e)?);
    record_invertible(&mut r, "iso.f_invertible", "Thm.EGIHT", &iso.f);
    record_invertible(&mut r, "iso.g_invertible", "Thm.EGIHT", &iso.g);
    r.equal(
        "action_recovered",
        "Thm.EGIHT",
        &(&e.phi_h * &c.pi.tensor(&iso.g)),
        &c.phi_h,
    );
    Ok(r)
}
