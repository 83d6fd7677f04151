//! Hopf trusses: a comonoid carrying a Hopf monoid `H₁ = (η, μ¹, λ)` and a
//! non-unital bimonoid `H₂ = μ²`, tied together by the cocycle σ through the
//! twisted distributivity law.

use crate::coalgebra::{
    associativity, expect_shape, id, product_is_comonoid_morphism, solve_antipode, sw, ComonoidData, HopfMonoidData,
    NonUnitalBimonoidData,
};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{tensor_all, LinMap};
use crate::report::VerificationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfTruss<K: Field> {
    pub comonoid: ComonoidData<K>,
    pub eta: LinMap<K>,
    /// Product of the Hopf monoid `H₁`.
    pub mu1: LinMap<K>,
    /// Product of the non-unital bimonoid `H₂`.
    pub mu2: LinMap<K>,
    pub lambda: LinMap<K>,
    pub sigma: LinMap<K>,
}

impl<K: Field> HopfTruss<K> {
    pub fn new(
        comonoid: ComonoidData<K>,
        eta: LinMap<K>,
        mu1: LinMap<K>,
        mu2: LinMap<K>,
        lambda: LinMap<K>,
        sigma: LinMap<K>,
    ) -> Result<Self> {
        let h = HopfTruss {
            comonoid,
            eta,
            mu1,
            mu2,
            lambda,
            sigma,
        };
        h.check_shapes()?;
        Ok(h)
    }

    /// The Hopf brace of a Hopf monoid with itself: `μ² = μ¹`, `σ = id`.
    pub fn brace_of(h: &HopfMonoidData<K>) -> Self {
        HopfTruss {
            comonoid: h.comonoid.clone(),
            eta: h.eta.clone(),
            mu1: h.mu.clone(),
            mu2: h.mu.clone(),
            lambda: h.lambda.clone(),
            sigma: id(h.ctx(), h.dim()),
        }
    }

    pub fn ctx(&self) -> &K::Ctx {
        self.comonoid.ctx()
    }

    pub fn dim(&self) -> usize {
        self.comonoid.dim
    }

    pub fn h1(&self) -> HopfMonoidData<K> {
        HopfMonoidData {
            comonoid: self.comonoid.clone(),
            eta: self.eta.clone(),
            mu: self.mu1.clone(),
            lambda: self.lambda.clone(),
        }
    }

    pub fn h2(&self) -> NonUnitalBimonoidData<K> {
        NonUnitalBimonoidData {
            comonoid: self.comonoid.clone(),
            mu: self.mu2.clone(),
        }
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.comonoid.check_shapes()?;
        let (ctx, d) = (self.ctx(), self.dim());
        expect_shape("eta", &self.eta, ctx, d, 1)?;
        expect_shape("mu1", &self.mu1, ctx, d, d * d)?;
        expect_shape("mu2", &self.mu2, ctx, d, d * d)?;
        expect_shape("lambda", &self.lambda, ctx, d, d)?;
        expect_shape("sigma", &self.sigma, ctx, d, d)
    }

    /// `Γ = μ¹ ∘ ((λ∘σ) ⊗ μ²) ∘ (δ ⊗ H)`, the twisted action of `H₂` on `H₁`.
    pub fn gamma_action(&self) -> LinMap<K> {
        let d = self.dim();
        let ls = &self.lambda * &self.sigma;
        &self.mu1 * &(&ls.tensor(&self.mu2) * &self.comonoid.delta.tensor(&id(self.ctx(), d)))
    }

    /// Antipode of `(η, μ², ε, δ)` when the truss is a Hopf brace.
    pub fn brace_antipode(&self) -> Option<LinMap<K>> {
        if !self.sigma.is_identity() {
            return None;
        }
        solve_antipode(&self.h2(), &self.eta).ok()
    }
}

/// `σ = μ² ∘ (H ⊗ η)`.
pub fn derive_sigma<K: Field>(mu2: &LinMap<K>, eta: &LinMap<K>) -> Result<LinMap<K>> {
    let d = eta.cod();
    expect_shape("eta", eta, mu2.ctx(), d, 1)?;
    expect_shape("mu2", mu2, eta.ctx(), d, d * d)?;
    Ok(mu2 * &id(eta.ctx(), d).tensor(eta))
}

/// Records that `(A, η, μ)` is a non-unital left `B`-module monoid under `phi`:
/// the action law, `φ∘(B⊗η) = ε⊗η`, and
/// `φ∘(B⊗μ) = μ∘(φ⊗φ)∘(B⊗c⊗A)∘(δ⊗A⊗A)`.
pub(crate) fn module_monoid_laws<K: Field>(
    b: &NonUnitalBimonoidData<K>,
    a_eta: &LinMap<K>,
    a_mu: &LinMap<K>,
    phi: &LinMap<K>,
    prefix: &str,
    r: &mut VerificationReport,
) {
    let ctx = b.ctx();
    let (bd, ad) = (b.dim(), a_eta.cod());
    let (ib, ia) = (id(ctx, bd), id(ctx, ad));
    r.equal(
        &format!("{prefix}action"),
        "Def.modmon",
        &(phi * &ib.tensor(phi)),
        &(phi * &b.mu.tensor(&ia)),
    );
    r.equal(
        &format!("{prefix}bmm1"),
        "Eq.(bmm1)",
        &(phi * &ib.tensor(a_eta)),
        &b.comonoid.epsilon.tensor(a_eta),
    );
    let rhs = a_mu
        * &(&phi.tensor(phi)
            * &(&tensor_all(&[&ib, &sw(ctx, bd, ad), &ia]) * &tensor_all(&[&b.comonoid.delta, &ia, &ia])));
    r.equal(&format!("{prefix}bmm2"), "Eq.(bmm2)", &(phi * &ib.tensor(a_mu)), &rhs);
}

pub fn verify_hopf_truss<K: Field>(h: &HopfTruss<K>) -> Result<VerificationReport> {
    h.check_shapes()?;
    let (ctx, d) = (h.ctx(), h.dim());
    let i = id(ctx, d);
    let mut r = VerificationReport::new();
    let h1 = h.h1();
    r.absorb("h1.", h1.verify()?);
    let mut h2 = VerificationReport::new();
    associativity(ctx, d, &h.mu2, "associative", &mut h2);
    product_is_comonoid_morphism(&h.comonoid, &h.mu2, "", &mut h2);
    r.absorb("h2.", h2);
    h.comonoid.morphism_laws(&h.comonoid, &h.sigma, "sigma.", &mut r);

    let gamma = h.gamma_action();
    let lhs = &h.mu2 * &i.tensor(&h.mu1);
    let rhs = &h.mu1
        * &(&h.mu2.tensor(&gamma)
            * &(&tensor_all(&[&i, &sw(ctx, d, d), &i]) * &tensor_all(&[&h.comonoid.delta, &i, &i])));
    r.equal("compatibility", "Def.H-truss(iii)", &lhs, &rhs);
    r.equal("cocycle", "Eq.(cocycle)", &h.sigma, &(&h.mu2 * &i.tensor(&h.eta)));
    r.equal(
        "cocycle1",
        "Eq.(cocycle1)",
        &(&h.sigma * &h.mu2),
        &(&h.mu2 * &i.tensor(&h.sigma)),
    );
    module_monoid_laws(&h.h2(), &h.eta, &h.mu1, &gamma, "gamma.", &mut r);

    r.flag("cocommutative", h.comonoid.is_cocommutative());
    r.flag("hopf_brace", h.brace_antipode().is_some());
    Ok(r)
}

/// Morphism laws for `f: src → dst`: Hopf monoid morphism on `H₁`, non-unital
/// bimonoid morphism on `H₂`, and the implied `σ'∘f = f∘σ`.
pub fn verify_truss_morphism<K: Field>(
    f: &LinMap<K>,
    src: &HopfTruss<K>,
    dst: &HopfTruss<K>,
) -> Result<VerificationReport> {
    src.check_shapes()?;
    dst.check_shapes()?;
    expect_shape("f", f, src.ctx(), dst.dim(), src.dim())?;
    let mut r = VerificationReport::new();
    src.h1().morphism_laws(&dst.h1(), f, "h1.", &mut r);
    r.equal(
        "h2.multiplicative",
        "Def.mor",
        &(&dst.mu2 * &f.tensor(f)),
        &(f * &src.mu2),
    );
    r.equal(
        "sigma_intertwining",
        "Eq.(mortruss)",
        &(&dst.sigma * f),
        &(f * &src.sigma),
    );
    Ok(r)
}
