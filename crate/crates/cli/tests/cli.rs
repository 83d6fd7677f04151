mod common;

use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use trusslab::algfile::{AlgFile, Kind, Structure};
use trusslab::settruss::verify_skew_truss;
use trusslab::Rational;

fn trusslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trusslab"))
        .args(args)
        .env_remove("TRUSSLAB_MAX_DIM")
        .output()
        .unwrap()
}

fn fixture(name: &str) -> String {
    common::fixture_path(name).to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_brace_passes() {
    let out = trusslab(&["verify", &fixture("hopftruss-z2-brace.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("hopftruss over Q: pass\n"));
}

#[test]
fn corrupted_sigma_fails_the_cocycle_check() {
    let out = trusslab(&[
        "verify",
        &fixture("hopftruss-z2-corrupt-sigma.json"),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let failing: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["anchor"].as_str().unwrap())
        .collect();
    assert!(failing.contains(&"Eq.(cocycle)"), "{failing:?}");
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c.as_object().unwrap().len(), 4);
        assert_eq!(c["pass"], c["residual_zero"]);
    }
}

#[test]
fn text_and_json_agree() {
    for name in [
        "hopftruss-z2-corrupt-sigma.json",
        "gic-transported-left-z3-q.json",
        "settruss-right-s3.json",
    ] {
        let text = trusslab(&["verify", &fixture(name)]);
        let js = trusslab(&["verify", &fixture(name), "--format", "json"]);
        assert_eq!(text.status.code(), js.status.code());
        let v = json(&js);
        let text = String::from_utf8(text.stdout).unwrap();
        let fails = text.lines().filter(|l| l.starts_with("FAIL ")).count();
        let json_fails = v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|c| c["pass"] == false)
            .count();
        assert_eq!(fails, json_fails, "{name}");
    }
}

#[test]
fn input_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("trusslab-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let cases = [
        write("truncated.json", "{\"kind\": \"hopftruss\""),
        write("unknown-kind.json", r#"{"kind":"loop","field":{"kind":"Q"}}"#),
        write(
            "bad-prime.json",
            r#"{"kind":"comonoid","field":{"kind":"Fp","p":9},"dims":{"h":1}}"#,
        ),
        write(
            "bad-shape.json",
            r#"{"kind":"comonoid","field":{"kind":"Q"},"dims":{"h":1},"maps":{"delta":[["1","0"]],"epsilon":[["1"]]}}"#,
        ),
        dir.join("missing.json").to_str().unwrap().to_string(),
    ];
    for path in &cases {
        let out = trusslab(&["verify", path]);
        assert_eq!(out.status.code(), Some(2), "{path}");
        assert!(!out.stderr.is_empty());
    }
    let brace = fixture("hopftruss-z2-brace.json");
    assert_eq!(
        trusslab(&["verify", &brace, "--kind", "quasigroup"]).status.code(),
        Some(2)
    );
    assert_eq!(trusslab(&["verify", &brace, "--kind", "gic"]).status.code(), Some(2));
    assert_eq!(trusslab(&["frobnicate"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_trusslab"))
        .args(["verify", &brace])
        .env("TRUSSLAB_MAX_DIM", "1")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn kind_override_reads_a_truss_as_its_comonoid_part() {
    let brace = fixture("hopftruss-z2-brace.json");
    // A hopftruss document carries a comonoid under the same map names.
    let out = trusslab(&["verify", &brace, "--kind", "comonoid"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn single_entry_corruptions_never_crash() {
    let text = fs::read_to_string(common::fixture_path("pimodule-rebased-e-left-z2-q.json")).unwrap();
    let doc = AlgFile::parse(&text).unwrap();
    let dir = std::env::temp_dir().join(format!("trusslab-corrupt-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    for (i, (name, rows)) in doc.maps.iter().enumerate() {
        for value in ["7", "x", ""] {
            let mut bad = doc.clone();
            let mut rows = rows.clone();
            rows[0][0] = value.to_string();
            bad.maps.insert(name.clone(), rows);
            let p = dir.join(format!("{i}-{}.json", value.len()));
            fs::write(&p, bad.to_json()).unwrap();
            let code = trusslab(&["verify", p.to_str().unwrap()]).status.code();
            let expected = if value == "7" { [0, 1] } else { [2, 2] };
            assert!(expected.contains(&code.unwrap()), "{name} = {value:?}: {code:?}");
        }
        let mut dropped = doc.clone();
        dropped.maps.remove(name);
        let p = dir.join(format!("{i}-missing.json"));
        fs::write(&p, dropped.to_json()).unwrap();
        assert_eq!(
            trusslab(&["verify", p.to_str().unwrap()]).status.code(),
            Some(2),
            "{name}"
        );
    }
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_z2_contains_the_named_trusses() {
    let out = trusslab(&["enumerate", "--group", "Z2"]);
    assert_eq!(out.status.code(), Some(0));
    let docs = json(&out);
    let docs = docs.as_array().unwrap();
    let (summary, trusses) = docs.split_last().unwrap();
    assert_eq!(summary["kind"], "summary");
    assert_eq!(summary["group"], "Z2");
    assert_eq!(summary["count"].as_u64().unwrap() as usize, trusses.len());
    for name in [
        "settruss-trivial-z2.json",
        "settruss-left-z2.json",
        "settruss-right-z2.json",
    ] {
        let fixture: Value = serde_json::from_str(&fs::read_to_string(common::fixture_path(name)).unwrap()).unwrap();
        assert!(trusses.contains(&fixture), "{name}");
    }
    for t in trusses {
        let doc: AlgFile = serde_json::from_value(t.clone()).unwrap();
        let Structure::SetTruss(t) = doc.decode::<Rational>(Kind::SetTruss).unwrap() else {
            panic!("not a settruss");
        };
        assert!(verify_skew_truss(&t).unwrap().passed());
    }
}

#[test]
fn enumerate_trivial_group_and_bounds() {
    let out = trusslab(&["enumerate", "--group", "Z1"]);
    assert_eq!(out.status.code(), Some(0));
    let docs = json(&out);
    assert_eq!(docs.as_array().unwrap().len(), 2);
    assert_eq!(docs[1]["count"], 1);
    assert_eq!(trusslab(&["enumerate", "--group", "Z5"]).status.code(), Some(2));
    assert_eq!(trusslab(&["enumerate", "--group", "S3"]).status.code(), Some(2));
    assert_eq!(trusslab(&["enumerate", "--group", "Q8"]).status.code(), Some(2));
}

#[test]
fn enumerate_from_a_cayley_file_matches_the_builtin() {
    let dir = std::env::temp_dir().join(format!("trusslab-enum-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let out = dir.join("z3.json");
    let from_file = trusslab(&[
        "enumerate",
        "--group",
        &fixture("settruss-trivial-z3.json"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(from_file.status.code(), Some(0));
    assert!(from_file.stdout.is_empty());
    let a: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let b = json(&trusslab(&["enumerate", "--group", "Z3"]));
    let n = a.as_array().unwrap().len();
    assert_eq!(a.as_array().unwrap()[..n - 1], b.as_array().unwrap()[..n - 1]);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pipeline_from_set_truss_through_both_functors() {
    for t in ["trivial", "left", "right"] {
        let out = trusslab(&[
            "pipeline",
            &fixture(&format!("settruss-{t}-z3.json")),
            "--steps",
            "linearize,verify,E,Q,roundtrip,grouplikes",
        ]);
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(out.status.code(), Some(0), "{text}");
        assert_eq!(text.lines().count(), 6);
        assert!(text.contains("step Q -> hopftruss"));
    }
}

#[test]
fn pipeline_fundamental_logs_theta() {
    let out = trusslab(&[
        "pipeline",
        &fixture("trusshopfmodule-induction2-left-z2-q.json"),
        "--steps",
        "fundamental",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["steps"][0]["info"][0], "theta: 4x4, coinvariants: 2");
}

#[test]
fn pipeline_stops_at_the_first_failure() {
    let out = trusslab(&[
        "pipeline",
        &fixture("hopftruss-z2-corrupt-sigma.json"),
        "--steps",
        "verify,E",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}

#[test]
fn pipeline_rejects_incompatible_steps() {
    let settruss = fixture("settruss-left-z2.json");
    for steps in ["fundamental", "E", "linearize,linearize", "linearize,Q", "teleport"] {
        assert_eq!(
            trusslab(&["pipeline", &settruss, "--steps", steps]).status.code(),
            Some(2),
            "{steps}"
        );
    }
}
