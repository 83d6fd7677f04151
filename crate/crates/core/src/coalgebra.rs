//! Structure-constant bundles for comonoids, monoids, non-unital bimonoids and
//! Hopf monoids in the symmetric category of finite-dimensional vector spaces,
//! together with their axiom checks, convolution, antipode solving and
//! grouplike extraction.

use crate::error::{shape, AlgebraError, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::{tensor_all, LinMap};
use crate::report::VerificationReport;

pub(crate) fn id<K: Field>(ctx: &K::Ctx, n: usize) -> LinMap<K> {
    LinMap::identity(ctx, n)
}

pub(crate) fn sw<K: Field>(ctx: &K::Ctx, m: usize, n: usize) -> LinMap<K> {
    LinMap::swap(ctx, m, n)
}

pub(crate) fn expect_shape<K: Field>(what: &str, m: &LinMap<K>, ctx: &K::Ctx, cod: usize, dom: usize) -> Result<()> {
    if m.ctx() != ctx {
        return Err(AlgebraError::FieldMismatch {
            expected: K::spec(ctx),
            found: K::spec(m.ctx()),
        });
    }
    if m.shape() != (cod, dom) {
        return Err(shape(
            "structure map",
            format!("{what} is {}x{}, expected {cod}x{dom}", m.cod(), m.dom()),
        ));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonoidData<K: Field> {
    pub dim: usize,
    /// `dim → dim ⊗ dim`
    pub delta: LinMap<K>,
    /// `dim → 1`
    pub epsilon: LinMap<K>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidData<K: Field> {
    pub dim: usize,
    /// `1 → dim`
    pub eta: LinMap<K>,
    /// `dim ⊗ dim → dim`
    pub mu: LinMap<K>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonUnitalBimonoidData<K: Field> {
    pub comonoid: ComonoidData<K>,
    pub mu: LinMap<K>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMonoidData<K: Field> {
    pub comonoid: ComonoidData<K>,
    pub eta: LinMap<K>,
    pub mu: LinMap<K>,
    pub lambda: LinMap<K>,
}

impl<K: Field> ComonoidData<K> {
    pub fn new(delta: LinMap<K>, epsilon: LinMap<K>) -> Result<Self> {
        let c = ComonoidData {
            dim: delta.dom(),
            delta,
            epsilon,
        };
        c.check_shapes()?;
        Ok(c)
    }

    /// The grouplike comonoid 𝔽[S] of an `n`-element set: `δ(s) = s ⊗ s`, `ε(s) = 1`.
    pub fn grouplike(ctx: &K::Ctx, n: usize) -> Self {
        let mut delta = LinMap::zero(ctx, n * n, n);
        for s in 0..n {
            delta.set(s * n + s, s, K::one(ctx));
        }
        ComonoidData {
            dim: n,
            delta,
            epsilon: LinMap::from_fn(ctx, 1, n, |_, _| K::one(ctx)),
        }
    }

    pub fn ctx(&self) -> &K::Ctx {
        self.delta.ctx()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let ctx = self.ctx();
        let d = self.dim;
        expect_shape("delta", &self.delta, ctx, d * d, d)?;
        expect_shape("epsilon", &self.epsilon, ctx, 1, d)
    }

    /// `δ_{D⊗D} = (D ⊗ c ⊗ D) ∘ (δ ⊗ δ)`.
    pub fn delta_tensor_square(&self) -> LinMap<K> {
        let (ctx, d) = (self.ctx(), self.dim);
        &tensor_all(&[&id(ctx, d), &sw(ctx, d, d), &id(ctx, d)]) * &self.delta.tensor(&self.delta)
    }

    pub fn is_cocommutative(&self) -> bool {
        &sw(self.ctx(), self.dim, self.dim) * &self.delta == self.delta
    }

    /// Whether every column of δ is `e_k ⊗ e_k` for a basis vector `e_k`.
    pub fn is_basis_diagonal(&self) -> bool {
        let d = self.dim;
        (0..d).all(|j| {
            let col = self.delta.column(j);
            let nz: Vec<usize> = (0..d * d).filter(|&i| !col[i].is_zero()).collect();
            nz.len() == 1 && col[nz[0]].is_one() && nz[0] / d == nz[0] % d
        })
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        self.check_shapes()?;
        let mut r = VerificationReport::new();
        comonoid_laws(self, &mut r);
        Ok(r)
    }

    /// Whether `f: self → other` is a comonoid morphism, recorded into `r`.
    pub(crate) fn morphism_laws(&self, other: &Self, f: &LinMap<K>, prefix: &str, r: &mut VerificationReport) {
        r.equal(
            &format!("{prefix}comultiplicative"),
            "Def.comonoid-morphism",
            &(&other.delta * f),
            &(&f.tensor(f) * &self.delta),
        );
        r.equal(
            &format!("{prefix}counit_preserving"),
            "Def.comonoid-morphism",
            &(&other.epsilon * f),
            &self.epsilon,
        );
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let ctx = self.ctx();
        let (x, y) = (self.dim, other.dim);
        ComonoidData {
            dim: x * y,
            delta: &tensor_all(&[&id(ctx, x), &sw(ctx, x, y), &id(ctx, y)]) * &self.delta.tensor(&other.delta),
            epsilon: self.epsilon.tensor(&other.epsilon),
        }
    }
}

fn comonoid_laws<K: Field>(c: &ComonoidData<K>, r: &mut VerificationReport) {
    let (ctx, d) = (c.ctx(), c.dim);
    let i = id(ctx, d);
    r.equal(
        "comonoid.counit_left",
        "Def.comonoid",
        &(&c.epsilon.tensor(&i) * &c.delta),
        &i,
    );
    r.equal(
        "comonoid.counit_right",
        "Def.comonoid",
        &(&i.tensor(&c.epsilon) * &c.delta),
        &i,
    );
    r.equal(
        "comonoid.coassociative",
        "Def.comonoid",
        &(&c.delta.tensor(&i) * &c.delta),
        &(&i.tensor(&c.delta) * &c.delta),
    );
}

pub(crate) fn unit_laws<K: Field>(
    ctx: &K::Ctx,
    d: usize,
    eta: &LinMap<K>,
    mu: &LinMap<K>,
    prefix: &str,
    r: &mut VerificationReport,
) {
    let i = id(ctx, d);
    r.equal(&format!("{prefix}unit_left"), "Def.monoid", &(mu * &eta.tensor(&i)), &i);
    r.equal(&format!("{prefix}unit_right"), "Def.monoid", &(mu * &i.tensor(eta)), &i);
}

pub(crate) fn associativity<K: Field>(ctx: &K::Ctx, d: usize, mu: &LinMap<K>, name: &str, r: &mut VerificationReport) {
    let i = id(ctx, d);
    r.equal(name, "Def.monoid", &(mu * &i.tensor(mu)), &(mu * &mu.tensor(&i)));
}

/// `ε∘μ = ε⊗ε` and `δ∘μ = (μ⊗μ)∘δ_{B⊗B}`.
pub(crate) fn product_is_comonoid_morphism<K: Field>(
    c: &ComonoidData<K>,
    mu: &LinMap<K>,
    prefix: &str,
    r: &mut VerificationReport,
) {
    r.equal(
        &format!("{prefix}counit_multiplicative"),
        "Eq.(et-mu-ep)",
        &(&c.epsilon * mu),
        &c.epsilon.tensor(&c.epsilon),
    );
    r.equal(
        &format!("{prefix}coproduct_multiplicative"),
        "Eq.(d-delta-et)",
        &(&c.delta * mu),
        &(&mu.tensor(mu) * &c.delta_tensor_square()),
    );
}

/// `ε∘η = id_K` and `δ∘η = η⊗η`.
pub(crate) fn unit_is_comonoid_morphism<K: Field>(
    c: &ComonoidData<K>,
    eta: &LinMap<K>,
    prefix: &str,
    r: &mut VerificationReport,
) {
    r.equal(
        &format!("{prefix}counit_of_unit"),
        "Eq.(et-mu-ep1)",
        &(&c.epsilon * eta),
        &id(c.ctx(), 1),
    );
    r.equal(
        &format!("{prefix}coproduct_of_unit"),
        "Eq.(d-delta-et1)",
        &(&c.delta * eta),
        &eta.tensor(eta),
    );
}

impl<K: Field> MonoidData<K> {
    pub fn new(eta: LinMap<K>, mu: LinMap<K>) -> Result<Self> {
        let m = MonoidData {
            dim: eta.cod(),
            eta,
            mu,
        };
        m.check_shapes()?;
        Ok(m)
    }

    pub fn ctx(&self) -> &K::Ctx {
        self.mu.ctx()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let (ctx, d) = (self.ctx(), self.dim);
        expect_shape("eta", &self.eta, ctx, d, 1)?;
        expect_shape("mu", &self.mu, ctx, d, d * d)
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        self.check_shapes()?;
        let mut r = VerificationReport::new();
        unit_laws(self.ctx(), self.dim, &self.eta, &self.mu, "monoid.", &mut r);
        associativity(self.ctx(), self.dim, &self.mu, "monoid.associative", &mut r);
        Ok(r)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let ctx = self.ctx();
        let (x, y) = (self.dim, other.dim);
        MonoidData {
            dim: x * y,
            eta: self.eta.tensor(&other.eta),
            mu: &self.mu.tensor(&other.mu) * &tensor_all(&[&id(ctx, x), &sw(ctx, y, x), &id(ctx, y)]),
        }
    }
}

impl<K: Field> NonUnitalBimonoidData<K> {
    pub fn new(comonoid: ComonoidData<K>, mu: LinMap<K>) -> Result<Self> {
        let b = NonUnitalBimonoidData { comonoid, mu };
        b.check_shapes()?;
        Ok(b)
    }

    pub fn ctx(&self) -> &K::Ctx {
        self.comonoid.ctx()
    }

    pub fn dim(&self) -> usize {
        self.comonoid.dim
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.comonoid.check_shapes()?;
        let d = self.dim();
        expect_shape("mu", &self.mu, self.ctx(), d, d * d)
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        self.check_shapes()?;
        let mut r = VerificationReport::new();
        comonoid_laws(&self.comonoid, &mut r);
        associativity(self.ctx(), self.dim(), &self.mu, "bimonoid.associative", &mut r);
        product_is_comonoid_morphism(&self.comonoid, &self.mu, "bimonoid.", &mut r);
        Ok(r)
    }

    /// Non-unital bimonoid morphism laws for `f: self → other`.
    pub(crate) fn morphism_laws(&self, other: &Self, f: &LinMap<K>, prefix: &str, r: &mut VerificationReport) {
        self.comonoid.morphism_laws(&other.comonoid, f, prefix, r);
        r.equal(
            &format!("{prefix}multiplicative"),
            "Def.nbimod",
            &(&other.mu * &f.tensor(f)),
            &(f * &self.mu),
        );
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let ctx = self.ctx();
        let (x, y) = (self.dim(), other.dim());
        NonUnitalBimonoidData {
            comonoid: self.comonoid.tensor(&other.comonoid),
            mu: &self.mu.tensor(&other.mu) * &tensor_all(&[&id(ctx, x), &sw(ctx, y, x), &id(ctx, y)]),
        }
    }
}

impl<K: Field> HopfMonoidData<K> {
    pub fn new(comonoid: ComonoidData<K>, eta: LinMap<K>, mu: LinMap<K>, lambda: LinMap<K>) -> Result<Self> {
        let h = HopfMonoidData {
            comonoid,
            eta,
            mu,
            lambda,
        };
        h.check_shapes()?;
        Ok(h)
    }

    /// Promotes a unital bimonoid to a Hopf monoid by solving for its antipode.
    pub fn from_bimonoid(b: &NonUnitalBimonoidData<K>, eta: &LinMap<K>) -> Result<Self> {
        let lambda = solve_antipode(b, eta)?;
        Self::new(b.comonoid.clone(), eta.clone(), b.mu.clone(), lambda)
    }

    pub fn ctx(&self) -> &K::Ctx {
        self.comonoid.ctx()
    }

    pub fn dim(&self) -> usize {
        self.comonoid.dim
    }

    pub fn monoid(&self) -> MonoidData<K> {
        MonoidData {
            dim: self.dim(),
            eta: self.eta.clone(),
            mu: self.mu.clone(),
        }
    }

    pub fn bimonoid(&self) -> NonUnitalBimonoidData<K> {
        NonUnitalBimonoidData {
            comonoid: self.comonoid.clone(),
            mu: self.mu.clone(),
        }
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.comonoid.check_shapes()?;
        let (ctx, d) = (self.ctx(), self.dim());
        expect_shape("eta", &self.eta, ctx, d, 1)?;
        expect_shape("mu", &self.mu, ctx, d, d * d)?;
        expect_shape("lambda", &self.lambda, ctx, d, d)
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        self.check_shapes()?;
        let (ctx, d) = (self.ctx(), self.dim());
        let mut r = VerificationReport::new();
        comonoid_laws(&self.comonoid, &mut r);
        unit_laws(ctx, d, &self.eta, &self.mu, "hopf.", &mut r);
        associativity(ctx, d, &self.mu, "hopf.associative", &mut r);
        product_is_comonoid_morphism(&self.comonoid, &self.mu, "hopf.", &mut r);
        unit_is_comonoid_morphism(&self.comonoid, &self.eta, "hopf.", &mut r);
        let unit = &self.eta * &self.comonoid.epsilon;
        let idm = id(ctx, d);
        let m = self.monoid();
        r.equal(
            "hopf.antipode_right",
            "Eq.(antipode)",
            &convolution_unchecked(&idm, &self.lambda, &self.comonoid, &m),
            &unit,
        );
        r.equal(
            "hopf.antipode_left",
            "Eq.(antipode)",
            &convolution_unchecked(&self.lambda, &idm, &self.comonoid, &m),
            &unit,
        );
        r.flag("cocommutative", self.comonoid.is_cocommutative());
        Ok(r)
    }

    /// Consequences of the antipode law: anti(co)multiplicativity, `λ∘η = η`,
    /// `ε∘λ = ε`, and `λ∘λ = id` when the Hopf monoid is commutative or
    /// cocommutative.
    pub fn verify_antipode_properties(&self) -> Result<VerificationReport> {
        self.check_shapes()?;
        let (ctx, d) = (self.ctx(), self.dim());
        let l = &self.lambda;
        let c = sw(ctx, d, d);
        let mut r = VerificationReport::new();
        r.equal(
            "antipode.antimultiplicative",
            "Rem.antipode",
            &(l * &self.mu),
            &(&self.mu * &(&l.tensor(l) * &c)),
        );
        r.equal(
            "antipode.anticomultiplicative",
            "Rem.antipode",
            &(&self.comonoid.delta * l),
            &(&c * &(&l.tensor(l) * &self.comonoid.delta)),
        );
        r.equal("antipode.fixes_unit", "Rem.antipode", &(l * &self.eta), &self.eta);
        r.equal(
            "antipode.preserves_counit",
            "Rem.antipode",
            &(&self.comonoid.epsilon * l),
            &self.comonoid.epsilon,
        );
        let commutative = &self.mu * &c == self.mu;
        let cocommutative = self.comonoid.is_cocommutative();
        if commutative || cocommutative {
            r.equal("antipode.involutive", "Rem.antipode", &(l * l), &id(ctx, d));
        }
        Ok(r)
    }

    /// Hopf monoid morphism laws for `f: self → other`, including `λ'∘f = f∘λ`.
    pub(crate) fn morphism_laws(&self, other: &Self, f: &LinMap<K>, prefix: &str, r: &mut VerificationReport) {
        self.comonoid.morphism_laws(&other.comonoid, f, prefix, r);
        r.equal(
            &format!("{prefix}multiplicative"),
            "Def.monoid-morphism",
            &(&other.mu * &f.tensor(f)),
            &(f * &self.mu),
        );
        r.equal(
            &format!("{prefix}unit_preserving"),
            "Def.monoid-morphism",
            &(f * &self.eta),
            &other.eta,
        );
        r.equal(
            &format!("{prefix}antipode_intertwining"),
            "Eq.(morant)",
            &(&other.lambda * f),
            &(f * &self.lambda),
        );
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let b = self.bimonoid().tensor(&other.bimonoid());
        HopfMonoidData {
            comonoid: b.comonoid,
            eta: self.eta.tensor(&other.eta),
            mu: b.mu,
            lambda: self.lambda.tensor(&other.lambda),
        }
    }
}

/// One of the four bundle kinds, for kind-dispatched verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bundle<K: Field> {
    Comonoid(ComonoidData<K>),
    Monoid(MonoidData<K>),
    NonUnitalBimonoid(NonUnitalBimonoidData<K>),
    Hopf(HopfMonoidData<K>),
}

pub fn verify_structure<K: Field>(bundle: &Bundle<K>) -> Result<VerificationReport> {
    match bundle {
        Bundle::Comonoid(c) => c.verify(),
        Bundle::Monoid(m) => m.verify(),
        Bundle::NonUnitalBimonoid(b) => b.verify(),
        Bundle::Hopf(h) => h.verify(),
    }
}

/// The tensor product `X ⊗ Y` of two bundles of the same kind, with structure
/// maps threaded through the braiding.
pub fn tensor_structure<K: Field>(x: &Bundle<K>, y: &Bundle<K>) -> Result<Bundle<K>> {
    let same_field = |a: &K::Ctx, b: &K::Ctx| {
        if a == b {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch {
                expected: K::spec(a),
                found: K::spec(b),
            })
        }
    };
    Ok(match (x, y) {
        (Bundle::Comonoid(a), Bundle::Comonoid(b)) => {
            same_field(a.ctx(), b.ctx())?;
            Bundle::Comonoid(a.tensor(b))
        }
        (Bundle::Monoid(a), Bundle::Monoid(b)) => {
            same_field(a.ctx(), b.ctx())?;
            Bundle::Monoid(a.tensor(b))
        }
        (Bundle::NonUnitalBimonoid(a), Bundle::NonUnitalBimonoid(b)) => {
            same_field(a.ctx(), b.ctx())?;
            Bundle::NonUnitalBimonoid(a.tensor(b))
        }
        (Bundle::Hopf(a), Bundle::Hopf(b)) => {
            same_field(a.ctx(), b.ctx())?;
            Bundle::Hopf(a.tensor(b))
        }
        _ => {
            return Err(AlgebraError::Invalid(
                "tensor_structure needs two bundles of the same kind".into(),
            ))
        }
    })
}

fn convolution_unchecked<K: Field>(f: &LinMap<K>, g: &LinMap<K>, d: &ComonoidData<K>, a: &MonoidData<K>) -> LinMap<K> {
    &a.mu * &(&f.tensor(g) * &d.delta)
}

/// `f ∗ g = μ_A ∘ (f ⊗ g) ∘ δ_D`.
pub fn convolution<K: Field>(
    f: &LinMap<K>,
    g: &LinMap<K>,
    d: &ComonoidData<K>,
    a: &MonoidData<K>,
) -> Result<LinMap<K>> {
    d.check_shapes()?;
    a.check_shapes()?;
    expect_shape("f", f, d.ctx(), a.dim, d.dim)?;
    expect_shape("g", g, d.ctx(), a.dim, d.dim)?;
    Ok(convolution_unchecked(f, g, d, a))
}

/// Solves `f ∗ x = η∘ε = x ∗ f` jointly for the entries of `x`.
pub fn convolution_inverse<K: Field>(f: &LinMap<K>, d: &ComonoidData<K>, a: &MonoidData<K>) -> Result<LinMap<K>> {
    d.check_shapes()?;
    a.check_shapes()?;
    expect_shape("f", f, d.ctx(), a.dim, d.dim)?;
    let ctx = d.ctx();
    let (rows, cols) = (a.dim, d.dim);
    let n = rows * cols;
    // Column k of the system is the pair (f ∗ E_k, E_k ∗ f) for the k-th
    // matrix unit E_k, flattened row-major.
    let mut system = LinMap::zero(ctx, 2 * n, n);
    for k in 0..n {
        let mut e = LinMap::zero(ctx, rows, cols);
        e.set(k / cols, k % cols, K::one(ctx));
        let left = convolution_unchecked(f, &e, d, a);
        let right = convolution_unchecked(&e, f, d, a);
        let shift = left.cod() * left.dom();
        for (i, j, v) in left.nonzeros() {
            system.set(i * cols + j, k, v.clone());
        }
        for (i, j, v) in right.nonzeros() {
            system.set(shift + i * cols + j, k, v.clone());
        }
    }
    let unit = &a.eta * &d.epsilon;
    let unit = unit.entries();
    let rhs = LinMap::from_fn(ctx, 2 * n, 1, |i, _| unit[i % n].clone());
    match system.solve(&rhs)? {
        Some(x) => LinMap::from_vec(ctx, rows, cols, x.entries()),
        None => Err(AlgebraError::NotInvertible),
    }
}

/// The antipode of a unital bimonoid: the convolution inverse of the identity.
pub fn solve_antipode<K: Field>(b: &NonUnitalBimonoidData<K>, eta: &LinMap<K>) -> Result<LinMap<K>> {
    b.check_shapes()?;
    let d = b.dim();
    expect_shape("eta", eta, b.ctx(), d, 1)?;
    let m = MonoidData {
        dim: d,
        eta: eta.clone(),
        mu: b.mu.clone(),
    };
    convolution_inverse(&id(b.ctx(), d), &b.comonoid, &m).map_err(|e| match e {
        AlgebraError::NotInvertible => AlgebraError::NoAntipode,
        other => other,
    })
}

/// A two-sided unit for `mu`, if one exists.
pub fn find_unit<K: Field>(ctx: &K::Ctx, dim: usize, mu: &LinMap<K>) -> Result<Option<LinMap<K>>> {
    expect_shape("mu", mu, ctx, dim, dim * dim)?;
    let d = dim;
    // Rows (i, j) for μ(η ⊗ e_j) = e_j, then for μ(e_j ⊗ η) = e_j.
    let mut system = LinMap::zero(ctx, 2 * d * d, d);
    let mut rhs = LinMap::zero(ctx, 2 * d * d, 1);
    for i in 0..d {
        for j in 0..d {
            let row = i * d + j;
            for k in 0..d {
                system.set(row, k, mu.get(i, k * d + j).clone());
                system.set(d * d + row, k, mu.get(i, j * d + k).clone());
            }
            if i == j {
                rhs.set(row, 0, K::one(ctx));
                rhs.set(d * d + row, 0, K::one(ctx));
            }
        }
    }
    system.solve(&rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrouplikeMode {
    /// Scan the basis; complete only for basis-diagonal coproducts.
    BasisScan,
    /// Enumerate every vector over a small prime field.
    ExhaustiveFp { bound: u64 },
}

impl GrouplikeMode {
    pub const DEFAULT_EXHAUSTIVE_BOUND: u64 = 1 << 20;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grouplikes<K: Field> {
    /// `dim × 1` vectors `g` with `δ(g) = g ⊗ g` and `ε(g) = 1`.
    pub vectors: Vec<LinMap<K>>,
    /// Whether `vectors` is provably every grouplike of the comonoid.
    pub complete: bool,
}

fn is_grouplike<K: Field>(c: &ComonoidData<K>, v: &LinMap<K>) -> bool {
    (&c.epsilon * v).get(0, 0).is_one() && &c.delta * v == v.tensor(v)
}

pub fn grouplikes<K: Field>(c: &ComonoidData<K>, mode: GrouplikeMode) -> Result<Grouplikes<K>> {
    c.check_shapes()?;
    let (ctx, d) = (c.ctx(), c.dim);
    match mode {
        GrouplikeMode::BasisScan => {
            let vectors = (0..d)
                .map(|i| LinMap::basis_vector(ctx, d, i))
                .filter(|v| is_grouplike(c, v))
                .collect();
            Ok(Grouplikes {
                vectors,
                complete: c.is_basis_diagonal(),
            })
        }
        GrouplikeMode::ExhaustiveFp { bound } => {
            let FieldSpec::PrimeField { p } = K::spec(ctx) else {
                return Err(AlgebraError::Invalid(
                    "exhaustive grouplike search needs a prime field".into(),
                ));
            };
            let total = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
            if total > bound as u128 {
                return Err(AlgebraError::BoundExceeded(format!(
                    "{p}^{d} candidate vectors exceeds bound {bound}"
                )));
            }
            let digits: Vec<K> = (0..p as i64).map(|v| K::from_i64(ctx, v)).collect();
            let mut vectors = Vec::new();
            // First coordinate least significant, so basis vectors come out
            // in basis order.
            for code in 0..total as u64 {
                let mut rest = code;
                let mut coords = vec![0usize; d];
                for slot in coords.iter_mut() {
                    *slot = (rest % p) as usize;
                    rest /= p;
                }
                let v = LinMap::from_fn(ctx, d, 1, |i, _| digits[coords[i]].clone());
                if is_grouplike(c, &v) {
                    vectors.push(v);
                }
            }
            Ok(Grouplikes {
                vectors,
                complete: true,
            })
        }
    }
}
