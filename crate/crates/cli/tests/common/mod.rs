//! Fixture construction shared by the integration tests. The JSON files under
//! `fixtures/` are the encodings of these values; `TRUSSLAB_BLESS=1` rewrites
//! them.

#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use trusslab::algfile::{AlgFile, Structure};
use trusslab::coalgebra::{ComonoidData, HopfMonoidData};
use trusslab::cocycle::{functor_e, functor_q, Gic, GicMorphism};
use trusslab::hopfmodule::{HopfModuleData, TrussHopfModule};
use trusslab::hopftruss::HopfTruss;
use trusslab::module::{functor_g_h, restrict_along, PiModule, TrussModule};
use trusslab::settruss::{linearize, FiniteGroup, SkewTruss};
use trusslab::{Field, Fp, LinMap, Rational};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

pub fn groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("z2", FiniteGroup::cyclic(2).unwrap()),
        ("z3", FiniteGroup::cyclic(3).unwrap()),
        ("s3", FiniteGroup::symmetric3()),
    ]
}

/// The trivial, left-projection and right-projection trusses on each group.
pub fn set_trusses() -> Vec<(String, SkewTruss)> {
    let mut out = Vec::new();
    for (g, group) in groups() {
        out.push((format!("trivial-{g}"), SkewTruss::trivial(&group)));
        out.push((format!("left-{g}"), SkewTruss::left_projection(&group)));
        out.push((format!("right-{g}"), SkewTruss::right_projection(&group)));
    }
    out
}

/// The group algebra ℚ[ℤ/2] as a Hopf brace, built from structure constants.
pub fn z2_brace() -> HopfTruss<Rational> {
    let ctx = &();
    let mut mu = LinMap::zero(ctx, 2, 4);
    for a in 0..2 {
        for b in 0..2 {
            mu.set((a + b) % 2, a * 2 + b, Rational::one(ctx));
        }
    }
    let h = HopfMonoidData::new(
        ComonoidData::grouplike(ctx, 2),
        LinMap::basis_vector(ctx, 2, 0),
        mu,
        LinMap::identity(ctx, 2),
    )
    .unwrap();
    HopfTruss::brace_of(&h)
}

pub fn q_trusses() -> Vec<(String, HopfTruss<Rational>)> {
    let mut out = vec![("z2-brace".to_string(), z2_brace())];
    out.extend(
        set_trusses()
            .into_iter()
            .map(|(n, t)| (format!("{n}-q"), linearize(&t, &()).unwrap())),
    );
    out
}

pub fn f5_trusses() -> Vec<(String, HopfTruss<Fp>)> {
    set_trusses()
        .into_iter()
        .map(|(n, t)| (format!("{n}-f5"), linearize(&t, &5).unwrap()))
        .collect()
}

/// A unimodular change of basis of dimension `n`: `I + N` with `N` strictly
/// upper triangular.
pub fn unimodular<K: Field>(ctx: &K::Ctx, n: usize) -> LinMap<K> {
    LinMap::from_fn(ctx, n, n, |i, j| {
        if i == j || j == i + 1 {
            K::one(ctx)
        } else if j == i + 2 {
            K::from_i64(ctx, -2)
        } else {
            K::zero(ctx)
        }
    })
}

/// `E(h)` for the ℚ trusses on ℤ/2 and ℤ/3, and their transports along a
/// unimodular basis change of `B`.
pub fn gics() -> Vec<(String, Gic<Rational>)> {
    let mut out = Vec::new();
    for (name, h) in q_trusses() {
        if name.ends_with("s3-q") {
            continue;
        }
        let c = functor_e(&h).unwrap();
        let alpha = unimodular::<Rational>(&(), h.dim());
        out.push((format!("e-{name}"), c.clone()));
        if name != "z2-brace" {
            out.push((format!("transported-{name}"), c.transport(&alpha).unwrap()));
        }
    }
    out
}

/// Four modules over `c`: the regular one, `G` of the trivial and induced
/// truss modules pulled back along `(π, id)`, and the regular one with `N`
/// rebased.
pub fn pi_modules(c: &Arc<Gic<Rational>>) -> Vec<(String, PiModule<Rational>)> {
    let h = Arc::new(functor_q(c).unwrap());
    let back = GicMorphism {
        f: c.pi.clone(),
        g: LinMap::identity(&(), c.h.dim()),
    };
    let pulled = |m: TrussModule<Rational>| restrict_along(&back, c, &functor_g_h(&m).unwrap()).unwrap();
    let regular = PiModule::regular(c.clone());
    let rebased = regular.transport_n(&unimodular::<Rational>(&(), c.b.dim())).unwrap();
    vec![
        ("regular".into(), regular),
        ("trivial".into(), pulled(TrussModule::trivial(h.clone()))),
        ("induction2".into(), pulled(TrussModule::induction(h, 2))),
        ("rebased".into(), rebased),
    ]
}

fn doc<K: Field>(s: Structure<K>, ctx: &K::Ctx) -> String {
    AlgFile::encode(&s, ctx).to_json() + "\n"
}

/// Every fixture file name with its contents.
pub fn all_fixtures() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (name, t) in set_trusses() {
        out.push((
            format!("settruss-{name}.json"),
            doc::<Rational>(Structure::SetTruss(t), &()),
        ));
    }
    for (name, h) in q_trusses() {
        out.push((format!("hopftruss-{name}.json"), doc(Structure::HopfTruss(h), &())));
    }
    for (name, h) in f5_trusses() {
        out.push((format!("hopftruss-{name}.json"), doc(Structure::HopfTruss(h), &5)));
    }
    let mut corrupt = z2_brace();
    corrupt.sigma = LinMap::from_i64_rows(&(), &[&[0, 1], &[1, 0]]);
    out.push((
        "hopftruss-z2-corrupt-sigma.json".into(),
        doc(Structure::HopfTruss(corrupt), &()),
    ));

    for (name, c) in gics() {
        let c = Arc::new(c);
        for (mname, m) in pi_modules(&c) {
            out.push((
                format!("pimodule-{mname}-{name}.json"),
                doc(Structure::PiModule(m), &()),
            ));
        }
        out.push((format!("gic-{name}.json"), doc(Structure::Gic((*c).clone()), &())));
    }

    for (name, h) in q_trusses() {
        let h = Arc::new(h);
        out.push((
            format!("trusshopfmodule-regular-{name}.json"),
            doc(Structure::TrussHopfModule(TrussHopfModule::regular(h.clone())), &()),
        ));
        if name.contains("z2") {
            let m = trusslab::hopfmodule::induction_functor(&h, 2).unwrap();
            out.push((
                format!("trusshopfmodule-induction2-{name}.json"),
                doc(Structure::TrussHopfModule(m), &()),
            ));
        }
    }
    let h1 = Arc::new(z2_brace().h1());
    out.push((
        "hopfmodule-regular-z2.json".into(),
        doc(Structure::HopfModule(HopfModuleData::regular(h1)), &()),
    ));
    out.sort();
    out
}
