//! The algfile JSON format: one document kind per structure, matrices as row
//! arrays of scalar strings, Cayley tables as row arrays of 0-based indices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coalgebra::{ComonoidData, HopfMonoidData, MonoidData, NonUnitalBimonoidData};
use crate::cocycle::{verify_gic, Gic};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, FieldSpec};
use crate::hopfmodule::{verify_hopf_module, verify_truss_hopf_module, HopfModuleData, TrussHopfModule};
use crate::hopftruss::{verify_hopf_truss, HopfTruss};
use crate::linalg::LinMap;
use crate::module::{verify_pi_module, verify_truss_module, PiModule, TrussModule};
use crate::report::VerificationReport;
use crate::settruss::{verify_skew_truss, FiniteGroup, FiniteSemigroup, SkewTruss};

pub const MAX_DIM_VAR: &str = "TRUSSLAB_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 16;

/// The dimension cap from `TRUSSLAB_MAX_DIM`, defaulting to 16.
pub fn max_dim() -> Result<usize> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("{MAX_DIM_VAR}={v:?} is not a dimension"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Comonoid,
    Monoid,
    Bimonoid,
    Hopf,
    HopfTruss,
    Gic,
    TrussModule,
    PiModule,
    HopfModule,
    TrussHopfModule,
    SetTruss,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::Comonoid,
        Kind::Monoid,
        Kind::Bimonoid,
        Kind::Hopf,
        Kind::HopfTruss,
        Kind::Gic,
        Kind::TrussModule,
        Kind::PiModule,
        Kind::HopfModule,
        Kind::TrussHopfModule,
        Kind::SetTruss,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Comonoid => "comonoid",
            Kind::Monoid => "monoid",
            Kind::Bimonoid => "bimonoid",
            Kind::Hopf => "hopf",
            Kind::HopfTruss => "hopftruss",
            Kind::Gic => "gic",
            Kind::TrussModule => "trussmodule",
            Kind::PiModule => "pimodule",
            Kind::HopfModule => "hopfmodule",
            Kind::TrussHopfModule => "trusshopfmodule",
            Kind::SetTruss => "settruss",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| AlgebraError::Parse(format!("unknown kind {s:?}")))
    }
}

/// A parsed but untyped document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgFile {
    pub kind: Kind,
    pub field: FieldSpec,
    #[serde(default)]
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tables: BTreeMap<String, Vec<Vec<usize>>>,
}

/// A typed structure of any document kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure<K: Field> {
    Comonoid(ComonoidData<K>),
    Monoid(MonoidData<K>),
    Bimonoid(NonUnitalBimonoidData<K>),
    Hopf(HopfMonoidData<K>),
    HopfTruss(HopfTruss<K>),
    Gic(Gic<K>),
    TrussModule(TrussModule<K>),
    PiModule(PiModule<K>),
    HopfModule(HopfModuleData<K>),
    TrussHopfModule(TrussHopfModule<K>),
    SetTruss(SkewTruss),
}

impl<K: Field> Structure<K> {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Comonoid(_) => Kind::Comonoid,
            Structure::Monoid(_) => Kind::Monoid,
            Structure::Bimonoid(_) => Kind::Bimonoid,
            Structure::Hopf(_) => Kind::Hopf,
            Structure::HopfTruss(_) => Kind::HopfTruss,
            Structure::Gic(_) => Kind::Gic,
            Structure::TrussModule(_) => Kind::TrussModule,
            Structure::PiModule(_) => Kind::PiModule,
            Structure::HopfModule(_) => Kind::HopfModule,
            Structure::TrussHopfModule(_) => Kind::TrussHopfModule,
            Structure::SetTruss(_) => Kind::SetTruss,
        }
    }
}

/// Runs the verifier for the structure's kind.
pub fn verify<K: Field>(s: &Structure<K>) -> Result<VerificationReport> {
    match s {
        Structure::Comonoid(c) => c.verify(),
        Structure::Monoid(m) => m.verify(),
        Structure::Bimonoid(b) => b.verify(),
        Structure::Hopf(h) => {
            let mut r = h.verify()?;
            if r.passed() {
                r.absorb("", h.verify_antipode_properties()?);
            }
            Ok(r)
        }
        Structure::HopfTruss(h) => verify_hopf_truss(h),
        Structure::Gic(c) => verify_gic(c),
        Structure::TrussModule(m) => verify_truss_module(m),
        Structure::PiModule(m) => verify_pi_module(m),
        Structure::HopfModule(m) => verify_hopf_module(m),
        Structure::TrussHopfModule(m) => verify_truss_hopf_module(m),
        Structure::SetTruss(t) => verify_skew_truss(t),
    }
}

struct Reader<'a, K: Field> {
    file: &'a AlgFile,
    ctx: K::Ctx,
    max_dim: usize,
}

impl<K: Field> Reader<'_, K> {
    fn dim(&self, key: &str) -> Result<usize> {
        let d = *self
            .file
            .dims
            .get(key)
            .ok_or_else(|| AlgebraError::Parse(format!("missing dimension {key:?}")))?;
        if d > self.max_dim {
            return Err(AlgebraError::BoundExceeded(format!(
                "dimension {key} = {d} exceeds {MAX_DIM_VAR} = {}",
                self.max_dim
            )));
        }
        Ok(d)
    }

    fn map(&self, name: &str, cod: usize, dom: usize) -> Result<LinMap<K>> {
        let rows = self
            .file
            .maps
            .get(name)
            .ok_or_else(|| AlgebraError::Parse(format!("missing map {name:?}")))?;
        if rows.len() != cod || rows.iter().any(|r| r.len() != dom) {
            return Err(AlgebraError::Parse(format!("map {name:?} must be {cod}x{dom}")));
        }
        let data = rows
            .iter()
            .flatten()
            .map(|s| K::parse(&self.ctx, s))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| AlgebraError::Parse(format!("map {name:?}: {e}")))?;
        LinMap::from_vec(&self.ctx, cod, dom, data)
    }

    fn table(&self, name: &str) -> Result<Vec<Vec<usize>>> {
        let t = self
            .file
            .tables
            .get(name)
            .ok_or_else(|| AlgebraError::Parse(format!("missing table {name:?}")))?;
        if t.len() > self.max_dim {
            return Err(AlgebraError::BoundExceeded(format!(
                "table {name} has {} elements, more than {MAX_DIM_VAR} = {}",
                t.len(),
                self.max_dim
            )));
        }
        Ok(t.clone())
    }

    fn comonoid(&self, prefix: &str, d: usize) -> Result<ComonoidData<K>> {
        Ok(ComonoidData {
            dim: d,
            delta: self.map(&format!("{prefix}delta"), d * d, d)?,
            epsilon: self.map(&format!("{prefix}epsilon"), 1, d)?,
        })
    }

    fn hopf(&self, prefix: &str, d: usize) -> Result<HopfMonoidData<K>> {
        Ok(HopfMonoidData {
            comonoid: self.comonoid(prefix, d)?,
            eta: self.map(&format!("{prefix}eta"), d, 1)?,
            mu: self.map(&format!("{prefix}mu"), d, d * d)?,
            lambda: self.map(&format!("{prefix}lambda"), d, d)?,
        })
    }

    fn truss(&self) -> Result<HopfTruss<K>> {
        let d = self.dim("h")?;
        Ok(HopfTruss {
            comonoid: self.comonoid("", d)?,
            eta: self.map("eta", d, 1)?,
            mu1: self.map("mu1", d, d * d)?,
            mu2: self.map("mu2", d, d * d)?,
            lambda: self.map("lambda", d, d)?,
            sigma: self.map("sigma", d, d)?,
        })
    }

    fn gic(&self) -> Result<Gic<K>> {
        let (b, h) = (self.dim("b")?, self.dim("h")?);
        Ok(Gic {
            b: NonUnitalBimonoidData {
                comonoid: self.comonoid("b_", b)?,
                mu: self.map("b_mu", b, b * b)?,
            },
            h: self.hopf("h_", h)?,
            pi: self.map("pi", h, b)?,
            theta: self.map("theta", b, b)?,
            phi_h: self.map("phi_h", h, b * h)?,
        })
    }

    fn structure(&self, kind: Kind) -> Result<Structure<K>> {
        Ok(match kind {
            Kind::Comonoid => Structure::Comonoid(self.comonoid("", self.dim("h")?)?),
            Kind::Monoid => {
                let d = self.dim("h")?;
                Structure::Monoid(MonoidData {
                    dim: d,
                    eta: self.map("eta", d, 1)?,
                    mu: self.map("mu", d, d * d)?,
                })
            }
            Kind::Bimonoid => {
                let d = self.dim("h")?;
                Structure::Bimonoid(NonUnitalBimonoidData {
                    comonoid: self.comonoid("", d)?,
                    mu: self.map("mu", d, d * d)?,
                })
            }
            Kind::Hopf => Structure::Hopf(self.hopf("", self.dim("h")?)?),
            Kind::HopfTruss => Structure::HopfTruss(self.truss()?),
            Kind::Gic => Structure::Gic(self.gic()?),
            Kind::TrussModule => {
                let (h, m) = (self.dim("h")?, self.dim("m")?);
                Structure::TrussModule(TrussModule {
                    truss: Arc::new(self.truss()?),
                    dim: m,
                    psi1: self.map("psi1", m, h * m)?,
                    psi2: self.map("psi2", m, h * m)?,
                })
            }
            Kind::PiModule => {
                let (b, h, m, n) = (self.dim("b")?, self.dim("h")?, self.dim("m")?, self.dim("n")?);
                Structure::PiModule(PiModule {
                    gic: Arc::new(self.gic()?),
                    m_dim: m,
                    n_dim: n,
                    phi_m: self.map("phi_m", m, b * m)?,
                    varphi_m: self.map("varphi_m", m, h * m)?,
                    phi_n: self.map("phi_n", n, b * n)?,
                    gamma: self.map("gamma", m, n)?,
                })
            }
            Kind::HopfModule => {
                let (h, m) = (self.dim("h")?, self.dim("m")?);
                Structure::HopfModule(HopfModuleData {
                    hopf: Arc::new(self.hopf("", h)?),
                    dim: m,
                    varphi: self.map("varphi", m, h * m)?,
                    rho: self.map("rho", h * m, m)?,
                })
            }
            Kind::TrussHopfModule => {
                let (h, m) = (self.dim("h")?, self.dim("m")?);
                Structure::TrussHopfModule(TrussHopfModule {
                    truss: Arc::new(self.truss()?),
                    dim: m,
                    psi1: self.map("psi1", m, h * m)?,
                    psi2: self.map("psi2", m, h * m)?,
                    rho: self.map("rho", h * m, m)?,
                })
            }
            Kind::SetTruss => {
                let group = FiniteGroup::from_table_unchecked(self.table("group")?)?;
                let semigroup = self.table("semigroup")?;
                let omega = match self.table("omega")?.as_slice() {
                    [row] => row.clone(),
                    _ => return Err(AlgebraError::Parse("table \"omega\" must have one row".into())),
                };
                let n = group.order();
                if semigroup.len() != n || semigroup.iter().any(|r| r.len() != n) || omega.len() != n {
                    return Err(AlgebraError::Parse(format!(
                        "settruss tables must be over {n} elements"
                    )));
                }
                if semigroup.iter().flatten().chain(&omega).any(|&x| x >= n) {
                    return Err(AlgebraError::Parse("table entry out of range".into()));
                }
                Structure::SetTruss(SkewTruss {
                    group,
                    semigroup: FiniteSemigroup { table: semigroup },
                    omega,
                })
            }
        })
    }
}

struct Writer<K: Field> {
    file: AlgFile,
    _field: std::marker::PhantomData<K>,
}

impl<K: Field> Writer<K> {
    fn dim(&mut self, key: &str, d: usize) {
        self.file.dims.insert(key.into(), d);
    }

    fn map(&mut self, name: &str, m: &LinMap<K>) {
        let rows = (0..m.cod())
            .map(|i| m.row(i).iter().map(|v| v.to_string()).collect())
            .collect();
        self.file.maps.insert(name.into(), rows);
    }

    fn comonoid(&mut self, prefix: &str, c: &ComonoidData<K>) {
        self.map(&format!("{prefix}delta"), &c.delta);
        self.map(&format!("{prefix}epsilon"), &c.epsilon);
    }

    fn hopf(&mut self, prefix: &str, h: &HopfMonoidData<K>) {
        self.comonoid(prefix, &h.comonoid);
        self.map(&format!("{prefix}eta"), &h.eta);
        self.map(&format!("{prefix}mu"), &h.mu);
        self.map(&format!("{prefix}lambda"), &h.lambda);
    }

    fn truss(&mut self, h: &HopfTruss<K>) {
        self.dim("h", h.dim());
        self.comonoid("", &h.comonoid);
        self.map("eta", &h.eta);
        self.map("mu1", &h.mu1);
        self.map("mu2", &h.mu2);
        self.map("lambda", &h.lambda);
        self.map("sigma", &h.sigma);
    }

    fn gic(&mut self, c: &Gic<K>) {
        self.dim("b", c.b.dim());
        self.dim("h", c.h.dim());
        self.comonoid("b_", &c.b.comonoid);
        self.map("b_mu", &c.b.mu);
        self.hopf("h_", &c.h);
        self.map("pi", &c.pi);
        self.map("theta", &c.theta);
        self.map("phi_h", &c.phi_h);
    }
}

impl AlgFile {
    /// Parses a document; structure is checked later by [`AlgFile::decode`].
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algfile documents always serialize")
    }

    /// Builds the typed structure of the given kind, usually `self.kind`.
    /// Fails on a field mismatch, a missing or misshapen map, an unparsable
    /// scalar, or a dimension above [`max_dim`].
    pub fn decode<K: Field>(&self, kind: Kind) -> Result<Structure<K>> {
        let ctx = K::context(self.field.validate()?)?;
        Reader {
            file: self,
            ctx,
            max_dim: max_dim()?,
        }
        .structure(kind)
    }

    pub fn encode<K: Field>(s: &Structure<K>, ctx: &K::Ctx) -> Self {
        let mut w = Writer::<K> {
            file: AlgFile {
                kind: s.kind(),
                field: K::spec(ctx),
                dims: BTreeMap::new(),
                maps: BTreeMap::new(),
                tables: BTreeMap::new(),
            },
            _field: std::marker::PhantomData,
        };
        match s {
            Structure::Comonoid(c) => {
                w.dim("h", c.dim);
                w.comonoid("", c);
            }
            Structure::Monoid(m) => {
                w.dim("h", m.dim);
                w.map("eta", &m.eta);
                w.map("mu", &m.mu);
            }
            Structure::Bimonoid(b) => {
                w.dim("h", b.dim());
                w.comonoid("", &b.comonoid);
                w.map("mu", &b.mu);
            }
            Structure::Hopf(h) => {
                w.dim("h", h.dim());
                w.hopf("", h);
            }
            Structure::HopfTruss(h) => w.truss(h),
            Structure::Gic(c) => w.gic(c),
            Structure::TrussModule(m) => {
                w.truss(&m.truss);
                w.dim("m", m.dim);
                w.map("psi1", &m.psi1);
                w.map("psi2", &m.psi2);
            }
            Structure::PiModule(m) => {
                w.gic(&m.gic);
                w.dim("m", m.m_dim);
                w.dim("n", m.n_dim);
                w.map("phi_m", &m.phi_m);
                w.map("varphi_m", &m.varphi_m);
                w.map("phi_n", &m.phi_n);
                w.map("gamma", &m.gamma);
            }
            Structure::HopfModule(m) => {
                w.dim("h", m.hopf.dim());
                w.hopf("", &m.hopf);
                w.dim("m", m.dim);
                w.map("varphi", &m.varphi);
                w.map("rho", &m.rho);
            }
            Structure::TrussHopfModule(m) => {
                w.truss(&m.truss);
                w.dim("m", m.dim);
                w.map("psi1", &m.psi1);
                w.map("psi2", &m.psi2);
                w.map("rho", &m.rho);
            }
            Structure::SetTruss(t) => {
                w.dim("n", t.order());
                let tables = &mut w.file.tables;
                tables.insert("group".into(), t.group.table.clone());
                tables.insert("semigroup".into(), t.semigroup.table.clone());
                tables.insert("omega".into(), vec![t.omega.clone()]);
            }
        }
        w.file
    }
}
