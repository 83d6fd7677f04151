//! Left modules over Hopf trusses and over generalized 1-cocycles, and the
//! functors relating them.

use std::sync::Arc;

use crate::coalgebra::{expect_shape, id, sw};
use crate::cocycle::{functor_e, functor_q, record_invertible, verify_gic_morphism, Gic, GicMorphism};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::hopftruss::HopfTruss;
use crate::linalg::{tensor_all, LinMap};
use crate::report::{Residual, VerificationReport};

/// `(M, ψ¹, ψ²)`: a unital `H₁`-action and a non-unital `H₂`-action on `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrussModule<K: Field> {
    pub truss: Arc<HopfTruss<K>>,
    pub dim: usize,
    pub psi1: LinMap<K>,
    pub psi2: LinMap<K>,
}

impl<K: Field> TrussModule<K> {
    pub fn new(truss: Arc<HopfTruss<K>>, psi1: LinMap<K>, psi2: LinMap<K>) -> Result<Self> {
        let m = TrussModule {
            dim: psi1.cod(),
            truss,
            psi1,
            psi2,
        };
        m.check_shapes()?;
        Ok(m)
    }

    /// `(H, μ¹, μ²)`.
    pub fn regular(truss: Arc<HopfTruss<K>>) -> Self {
        let (psi1, psi2) = (truss.mu1.clone(), truss.mu2.clone());
        TrussModule {
            dim: truss.dim(),
            truss,
            psi1,
            psi2,
        }
    }

    /// `(K, ε, ε)`.
    pub fn trivial(truss: Arc<HopfTruss<K>>) -> Self {
        let eps = truss.comonoid.epsilon.clone();
        TrussModule {
            dim: 1,
            truss,
            psi1: eps.clone(),
            psi2: eps,
        }
    }

    /// `(H ⊗ X, μ¹ ⊗ X, μ² ⊗ X)` for `dim X = xdim`.
    pub fn induction(truss: Arc<HopfTruss<K>>, xdim: usize) -> Self {
        let x = id(truss.ctx(), xdim);
        TrussModule {
            dim: truss.dim() * xdim,
            psi1: truss.mu1.tensor(&x),
            psi2: truss.mu2.tensor(&x),
            truss,
        }
    }

    pub fn ctx(&self) -> &K::Ctx {
        self.truss.ctx()
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.truss.check_shapes()?;
        let (ctx, h, m) = (self.ctx(), self.truss.dim(), self.dim);
        expect_shape("psi1", &self.psi1, ctx, m, h * m)?;
        expect_shape("psi2", &self.psi2, ctx, m, h * m)
    }

    /// `Γ_M = ψ¹ ∘ ((λ∘σ) ⊗ ψ²) ∘ (δ ⊗ M)`.
    pub fn gamma_action(&self) -> LinMap<K> {
        let h = &self.truss;
        let ls = &h.lambda * &h.sigma;
        &self.psi1 * &(&ls.tensor(&self.psi2) * &h.comonoid.delta.tensor(&id(self.ctx(), self.dim)))
    }
}

/// `Λ = μ¹ ∘ (μ² ⊗ (λ∘σ)) ∘ (H ⊗ c) ∘ (δ ⊗ H)`.
pub fn lambda_map<K: Field>(h: &HopfTruss<K>) -> LinMap<K> {
    let (ctx, d) = (h.ctx(), h.dim());
    let i = id(ctx, d);
    let ls = &h.lambda * &h.sigma;
    &h.mu1 * &(&h.mu2.tensor(&ls) * &(&i.tensor(&sw(ctx, d, d)) * &h.comonoid.delta.tensor(&i)))
}

/// Action laws for `act: A ⊗ M → M` over the product `mu` (and unit `eta`
/// when the action is unital).
pub(crate) fn action_laws<K: Field>(
    eta: Option<&LinMap<K>>,
    mu: &LinMap<K>,
    act: &LinMap<K>,
    prefix: &str,
    anchor: &str,
    r: &mut VerificationReport,
) {
    let ctx = act.ctx();
    let (a, m) = (mu.cod(), act.cod());
    let (ia, im) = (id(ctx, a), id(ctx, m));
    if let Some(eta) = eta {
        r.equal(&format!("{prefix}unit"), anchor, &(act * &eta.tensor(&im)), &im);
    }
    r.equal(
        &format!("{prefix}associative"),
        anchor,
        &(act * &ia.tensor(act)),
        &(act * &mu.tensor(&im)),
    );
}

/// `(δ ⊗ H ⊗ M)` followed by `(H ⊗ c_{H,H} ⊗ M)`, the shared shuffle of the
/// two-action laws.
pub(crate) fn spread<K: Field>(ctx: &K::Ctx, delta: &LinMap<K>, h: usize, x: usize, m: usize) -> LinMap<K> {
    let (ih, ix, im) = (id(ctx, h), id(ctx, x), id(ctx, m));
    &tensor_all(&[&ih, &sw(ctx, h, x), &im]) * &tensor_all(&[delta, &ix, &im])
}

pub fn verify_truss_module<K: Field>(m: &TrussModule<K>) -> Result<VerificationReport> {
    m.check_shapes()?;
    let h = &m.truss;
    let (ctx, d, md) = (m.ctx(), h.dim(), m.dim);
    let ih = id(ctx, d);
    let mut r = VerificationReport::new();
    action_laws(Some(&h.eta), &h.mu1, &m.psi1, "psi1.", "Def.l-mod", &mut r);
    action_laws(None, &h.mu2, &m.psi2, "psi2.", "Def.l-mod", &mut r);

    let gamma_m = m.gamma_action();
    let shuffle = spread(ctx, &h.comonoid.delta, d, d, md);
    let lhs = &m.psi2 * &ih.tensor(&m.psi1);
    let l1 = r.equal(
        "mod_l1",
        "Eq.(mod-l1)",
        &lhs,
        &(&m.psi1 * &(&h.mu2.tensor(&gamma_m) * &shuffle)),
    );
    let l1p = r.equal(
        "mod_l1p",
        "Eq.(mod-l1p)",
        &lhs,
        &(&m.psi1 * &(&lambda_map(h).tensor(&m.psi2) * &shuffle)),
    );
    r.record(
        "mod_l1_equivalence",
        "Rem.yo",
        l1 == l1p,
        (l1 != l1p).then(|| Residual::Message(format!("mod_l1 = {l1}, mod_l1p = {l1p}"))),
    );
    r.equal(
        "gmh1",
        "Eq.(GMH1)",
        &(&gamma_m * &ih.tensor(&m.psi1)),
        &(&m.psi1 * &(&h.gamma_action().tensor(&gamma_m) * &shuffle)),
    );
    Ok(r)
}

/// `(M, N, φ_M, φ̂_M, φ_N, γ)`: a module over a generalized 1-cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiModule<K: Field> {
    pub gic: Arc<Gic<K>>,
    pub m_dim: usize,
    pub n_dim: usize,
    /// `B ⊗ M → M`
    pub phi_m: LinMap<K>,
    /// `H ⊗ M → M`
    pub varphi_m: LinMap<K>,
    /// `B ⊗ N → N`
    pub phi_n: LinMap<K>,
    /// `N → M`
    pub gamma: LinMap<K>,
}

impl<K: Field> PiModule<K> {
    pub fn new(
        gic: Arc<Gic<K>>,
        phi_m: LinMap<K>,
        varphi_m: LinMap<K>,
        phi_n: LinMap<K>,
        gamma: LinMap<K>,
    ) -> Result<Self> {
        let m = PiModule {
            gic,
            m_dim: phi_m.cod(),
            n_dim: phi_n.cod(),
            phi_m,
            varphi_m,
            phi_n,
            gamma,
        };
        m.check_shapes()?;
        Ok(m)
    }

    /// `(H, B, φ_H, μ_H, μ_B, π)`.
    pub fn regular(gic: Arc<Gic<K>>) -> Self {
        PiModule {
            m_dim: gic.h.dim(),
            n_dim: gic.b.dim(),
            phi_m: gic.phi_h.clone(),
            varphi_m: gic.h.mu.clone(),
            phi_n: gic.b.mu.clone(),
            gamma: gic.pi.clone(),
            gic,
        }
    }

    pub fn ctx(&self) -> &K::Ctx {
        self.gic.ctx()
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.gic.check_shapes()?;
        let ctx = self.ctx();
        let (b, h, m, n) = (self.gic.b.dim(), self.gic.h.dim(), self.m_dim, self.n_dim);
        expect_shape("phi_m", &self.phi_m, ctx, m, b * m)?;
        expect_shape("varphi_m", &self.varphi_m, ctx, m, h * m)?;
        expect_shape("phi_n", &self.phi_n, ctx, n, b * n)?;
        expect_shape("gamma", &self.gamma, ctx, m, n)
    }

    /// Replaces `N` by `N'` along an invertible `α: N' → N`.
    pub fn transport_n(&self, alpha: &LinMap<K>) -> Result<Self> {
        let inv = alpha.invert()?;
        let ib = id(self.ctx(), self.gic.b.dim());
        Self::new(
            self.gic.clone(),
            self.phi_m.clone(),
            self.varphi_m.clone(),
            &inv * &(&self.phi_n * &ib.tensor(alpha)),
            &self.gamma * alpha,
        )
    }
}

pub fn verify_pi_module<K: Field>(m: &PiModule<K>) -> Result<VerificationReport> {
    m.check_shapes()?;
    let c = &m.gic;
    let ctx = m.ctx();
    let (bd, hd, md) = (c.b.dim(), c.h.dim(), m.m_dim);
    let (ib, im) = (id(ctx, bd), id(ctx, md));
    let mut r = VerificationReport::new();
    action_laws(
        Some(&c.h.eta),
        &c.h.mu,
        &m.varphi_m,
        "varphi_m.",
        "Def.pi-module(ii)",
        &mut r,
    );
    action_laws(None, &c.b.mu, &m.phi_n, "phi_n.", "Def.pi-module(iii)", &mut r);
    let shuffle = &tensor_all(&[&ib, &sw(ctx, bd, hd), &im]) * &tensor_all(&[&c.b.comonoid.delta, &id(ctx, hd), &im]);
    r.equal(
        "p_v",
        "Eq.(p-v)",
        &(&m.phi_m * &ib.tensor(&m.varphi_m)),
        &(&m.varphi_m * &(&c.phi_h.tensor(&m.phi_m) * &shuffle)),
    );
    record_invertible(&mut r, "gamma.invertible", "Def.pi-module(v)", &m.gamma);
    let pt = &c.pi * &c.theta;
    let twisted = |g: &LinMap<K>| &m.varphi_m * &(&pt.tensor(&m.phi_m) * &c.b.comonoid.delta.tensor(g));
    r.equal(
        "gamma_equivariance",
        "Eq.(eq-gamma)",
        &(&m.gamma * &m.phi_n),
        &twisted(&m.gamma),
    );
    match m.gamma.invert() {
        Ok(ginv) => {
            r.equal("req_g1", "Eq.(req-g1)", &m.phi_n, &(&ginv * &twisted(&m.gamma)));
            let lpt = &c.h.lambda * &pt;
            r.equal(
                "req_g2",
                "Eq.(req-g2)",
                &m.phi_m,
                &(&m.varphi_m * &(&lpt.tensor(&(&m.gamma * &m.phi_n)) * &c.b.comonoid.delta.tensor(&ginv))),
            );
        }
        Err(_) => {
            for (name, anchor) in [("req_g1", "Eq.(req-g1)"), ("req_g2", "Eq.(req-g2)")] {
                r.record(
                    name,
                    anchor,
                    false,
                    Some(Residual::Message("gamma is not invertible".into())),
                );
            }
        }
    }
    Ok(r)
}

pub fn verify_pi_module_morphism<K: Field>(
    h: &LinMap<K>,
    l: &LinMap<K>,
    src: &PiModule<K>,
    dst: &PiModule<K>,
) -> Result<VerificationReport> {
    src.check_shapes()?;
    dst.check_shapes()?;
    if src.gic != dst.gic {
        return Err(AlgebraError::Invalid("modules over different cocycles".into()));
    }
    let ctx = src.ctx();
    expect_shape("h", h, ctx, dst.m_dim, src.m_dim)?;
    expect_shape("l", l, ctx, dst.n_dim, src.n_dim)?;
    let (ib, ih) = (id(ctx, src.gic.b.dim()), id(ctx, src.gic.h.dim()));
    let mut r = VerificationReport::new();
    r.equal(
        "h.phi_linear",
        "Def.pi-mor(i)",
        &(h * &src.phi_m),
        &(&dst.phi_m * &ib.tensor(h)),
    );
    r.equal(
        "h.varphi_linear",
        "Def.pi-mor(i)",
        &(h * &src.varphi_m),
        &(&dst.varphi_m * &ih.tensor(h)),
    );
    r.equal(
        "l.phi_linear",
        "Def.pi-mor(ii)",
        &(l * &src.phi_n),
        &(&dst.phi_n * &ib.tensor(l)),
    );
    r.equal("gamma_square", "Eq.(fg-g)", &(h * &src.gamma), &(&dst.gamma * l));
    match dst.gamma.invert() {
        Ok(ginv) => {
            r.equal("l_determined", "Eq.(fg-g)", l, &(&ginv * &(h * &src.gamma)));
        }
        Err(_) => r.record(
            "l_determined",
            "Eq.(fg-g)",
            false,
            Some(Residual::Message("target gamma is not invertible".into())),
        ),
    }
    Ok(r)
}

/// Pulls a module over `fg`'s target back to `src` along `fg = (f, g)`.
pub fn restrict_along<K: Field>(fg: &GicMorphism<K>, src: &Arc<Gic<K>>, m: &PiModule<K>) -> Result<PiModule<K>> {
    if !verify_gic_morphism(fg, src, &m.gic)?.passed() {
        return Err(AlgebraError::Invalid("restriction needs a cocycle morphism".into()));
    }
    let ctx = m.ctx();
    let (im, in_) = (id(ctx, m.m_dim), id(ctx, m.n_dim));
    PiModule::new(
        src.clone(),
        &m.phi_m * &fg.f.tensor(&im),
        &m.varphi_m * &fg.g.tensor(&im),
        &m.phi_n * &fg.f.tensor(&in_),
        m.gamma.clone(),
    )
}

/// `G(M, ψ¹, ψ²) = (M, M, Γ_M, ψ¹, ψ², id)` over `E` of the truss.
pub fn functor_g_h<K: Field>(m: &TrussModule<K>) -> Result<PiModule<K>> {
    if !verify_truss_module(m)?.passed() {
        return Err(AlgebraError::Invalid("G needs a valid truss module".into()));
    }
    PiModule::new(
        Arc::new(functor_e(&m.truss)?),
        m.gamma_action(),
        m.psi1.clone(),
        m.psi2.clone(),
        id(m.ctx(), m.dim),
    )
}

/// `H(M, N, φ_M, φ̂_M, φ_N, γ) = (M, φ̂_M, γ∘φ_N∘(π⁻¹⊗γ⁻¹))` over `Q` of the cocycle.
pub fn functor_h_tr_pi<K: Field>(m: &PiModule<K>) -> Result<TrussModule<K>> {
    if !verify_pi_module(m)?.passed() {
        return Err(AlgebraError::Invalid("H needs a valid cocycle module".into()));
    }
    let q = Arc::new(functor_q(&m.gic)?);
    let pinv = m.gic.pi.invert()?;
    let ginv = m.gamma.invert()?;
    TrussModule::new(q, m.varphi_m.clone(), &m.gamma * &(&m.phi_n * &pinv.tensor(&ginv)))
}

/// Verifies `H(m)` as a truss module and the identity `Γ_M = φ_M∘(π⁻¹⊗M)`.
pub fn verify_h_tr_pi<K: Field>(m: &PiModule<K>) -> Result<VerificationReport> {
    let out = functor_h_tr_pi(m)?;
    let mut r = VerificationReport::new();
    r.absorb("module.", verify_truss_module(&out)?);
    let pinv = m.gic.pi.invert()?;
    r.equal(
        "gamma_from_phi",
        "Eq.(pHpi1)",
        &out.gamma_action(),
        &(&m.phi_m * &pinv.tensor(&id(m.ctx(), m.m_dim))),
    );
    Ok(r)
}

/// Both composites of the module equivalence for a cocycle `c`:
/// `H∘M_{(π,id)}∘G` is the identity on `H(m)`, and `M_{(π,id)}∘G∘H` sends `m`
/// to a module isomorphic to it via `(id_M, γ)`.
pub fn equivalence_report<K: Field>(m: &PiModule<K>) -> Result<VerificationReport> {
    let c = &m.gic;
    let back = GicMorphism {
        f: c.pi.clone(),
        g: id(m.ctx(), c.h.dim()),
    };
    let tm = functor_h_tr_pi(m)?;
    let mut r = VerificationReport::new();

    let again = functor_h_tr_pi(&restrict_along(&back, c, &functor_g_h(&tm)?)?)?;
    r.record("forward.truss", "Thm.pHpi", again.truss == tm.truss, None);
    r.equal("forward.psi1", "Thm.pHpi", &again.psi1, &tm.psi1);
    r.equal("forward.psi2", "Thm.pHpi", &again.psi2, &tm.psi2);

    let round = restrict_along(&back, c, &functor_g_h(&tm)?)?;
    r.equal("reverse.phi_m", "Thm.pHpi", &round.phi_m, &m.phi_m);
    r.equal("reverse.varphi_m", "Thm.pHpi", &round.varphi_m, &m.varphi_m);
    let ginv = m.gamma.invert()?;
    r.equal(
        "reverse.phi_n",
        "Thm.pHpi",
        &round.phi_n,
        &(&m.gamma * &(&m.phi_n * &id(m.ctx(), c.b.dim()).tensor(&ginv))),
    );
    r.equal("reverse.gamma", "Thm.pHpi", &round.gamma, &id(m.ctx(), m.m_dim));
    let im = id(m.ctx(), m.m_dim);
    r.absorb("reverse.iso.", verify_pi_module_morphism(&im, &m.gamma, m, &round)?);
    record_invertible(&mut r, "reverse.iso.h_invertible", "Thm.pHpi", &im);
    record_invertible(&mut r, "reverse.iso.l_invertible", "Thm.pHpi", &m.gamma);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::settruss::{linearize, FiniteGroup, SkewTruss};

    fn truss(t: SkewTruss) -> Arc<HopfTruss<Rational>> {
        Arc::new(linearize(&t, &()).unwrap())
    }

    fn z3_right() -> Arc<HopfTruss<Rational>> {
        truss(SkewTruss::right_projection(&FiniteGroup::cyclic(3).unwrap()))
    }

    #[test]
    fn standard_truss_modules_pass() {
        let h = z3_right();
        for m in [
            TrussModule::regular(h.clone()),
            TrussModule::trivial(h.clone()),
            TrussModule::induction(h.clone(), 2),
        ] {
            let r = verify_truss_module(&m).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn broken_psi2_fails_both_forms_together() {
        let h = z3_right();
        let mut m = TrussModule::regular(h.clone());
        // h ⊗ m ↦ h
        m.psi2 = id(&(), 3).tensor(&h.comonoid.epsilon);
        let r = verify_truss_module(&m).unwrap();
        assert!(!r.get("mod_l1").unwrap().pass);
        assert!(!r.get("mod_l1p").unwrap().pass);
        assert!(r.get("mod_l1_equivalence").unwrap().pass);
    }

    #[test]
    fn lambda_map_of_brace() {
        let h = truss(SkewTruss::trivial(&FiniteGroup::cyclic(2).unwrap()));
        // Λ(a ⊗ b) = a·b·a⁻¹ = b on an abelian group.
        assert_eq!(lambda_map(&h), h.comonoid.epsilon.tensor(&id(&(), 2)));
    }

    #[test]
    fn regular_pi_module_and_corrupted_gamma() {
        let c = Arc::new(functor_e(&z3_right()).unwrap());
        let m = PiModule::regular(c.clone());
        assert!(verify_pi_module(&m).unwrap().passed());
        let mut bad = m.clone();
        bad.gamma = LinMap::zero(&(), 3, 3);
        let r = verify_pi_module(&bad).unwrap();
        assert!(!r.get("gamma.invertible").unwrap().pass);
    }

    #[test]
    fn g_of_trivial_module() {
        let h = z3_right();
        let g = functor_g_h(&TrussModule::trivial(h.clone())).unwrap();
        assert_eq!(g.gamma, id(&(), 1));
        assert_eq!(g.phi_m, h.comonoid.epsilon);
        assert!(verify_pi_module(&g).unwrap().passed());
    }

    #[test]
    fn h_of_regular_pi_module_is_regular() {
        let c = Arc::new(functor_e(&z3_right()).unwrap());
        let m = PiModule::regular(c);
        let t = functor_h_tr_pi(&m).unwrap();
        assert_eq!(t, TrussModule::regular(t.truss.clone()));
        assert!(verify_h_tr_pi(&m).unwrap().passed());
    }

    #[test]
    fn restricting_along_identity_changes_nothing() {
        let c = Arc::new(functor_e(&z3_right()).unwrap());
        let m = PiModule::regular(c.clone());
        let idm = GicMorphism {
            f: id(&(), 3),
            g: id(&(), 3),
        };
        assert_eq!(restrict_along(&idm, &c, &m).unwrap(), m);
    }

    #[test]
    fn pi_module_morphism_determinacy() {
        let c = Arc::new(functor_e(&z3_right()).unwrap());
        let m = PiModule::regular(c);
        let i = id(&(), 3);
        assert!(verify_pi_module_morphism(&i, &i, &m, &m).unwrap().passed());
        let r = verify_pi_module_morphism(&i, &LinMap::zero(&(), 3, 3), &m, &m).unwrap();
        assert!(r.fails_anchor("Eq.(fg-g)"));
    }

    #[test]
    fn equivalence_on_transported_module() {
        let c = Arc::new(functor_e(&z3_right()).unwrap());
        let alpha = LinMap::from_i64_rows(&(), &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]);
        let m = PiModule::regular(c).transport_n(&alpha).unwrap();
        assert!(verify_pi_module(&m).unwrap().passed());
        let r = equivalence_report(&m).unwrap();
        assert!(r.passed(), "{r}");
    }
}
