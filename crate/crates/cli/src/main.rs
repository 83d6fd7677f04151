use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use trusslab::algfile::{self, AlgFile, Kind, Structure};
use trusslab::coalgebra::GrouplikeMode;
use trusslab::cocycle::{functor_e, functor_q, roundtrip_report, verify_gic};
use trusslab::hopfmodule::fundamental_iso;
use trusslab::hopftruss::{verify_hopf_truss, HopfTruss};
use trusslab::settruss::{
    counit_report, enumerate_skew_trusses, linearize, truss_of_grouplikes, FiniteGroup, SkewTruss,
};
use trusslab::{AlgebraError, Field, FieldSpec, Fp, Rational, Residual, VerificationReport};

#[derive(Parser)]
#[command(
    name = "trusslab",
    version,
    about = "Verify Hopf trusses, cocycles and their modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of an algfile document.
    Verify {
        path: PathBuf,
        /// Read the document as this kind instead of its own.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every skew truss on a group.
    Enumerate {
        /// `Zn`, `S3`, or an algfile with a "group" table.
        #[arg(long)]
        group: String,
        /// Largest group order accepted.
        #[arg(long, default_value_t = trusslab::settruss::DEFAULT_ENUMERATION_BOUND)]
        max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a chain of constructions, verifying each result.
    Pipeline {
        path: PathBuf,
        /// Comma-separated: linearize, verify, grouplikes, E, Q, roundtrip, fundamental.
        #[arg(long, value_delimiter = ',', required = true)]
        steps: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Input or usage problems; every other failure is an axiom failure.
#[derive(Debug)]
struct UsageError(String);

impl From<AlgebraError> for UsageError {
    fn from(e: AlgebraError) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Serialize)]
struct CheckLine<'a> {
    name: &'a str,
    anchor: &'a str,
    pass: bool,
    residual_zero: bool,
}

fn residual_zero(residual: &Option<Residual>) -> bool {
    match residual {
        None => true,
        Some(Residual::Matrix { entries, .. }) => entries.iter().flatten().all(|v| v == "0"),
        Some(_) => false,
    }
}

fn check_lines(r: &VerificationReport) -> Vec<CheckLine<'_>> {
    r.checks
        .iter()
        .map(|c| CheckLine {
            name: &c.name,
            anchor: &c.anchor,
            pass: c.pass,
            residual_zero: residual_zero(&c.residual),
        })
        .collect()
}

fn report_json(r: &VerificationReport) -> serde_json::Value {
    json!({
        "pass": r.passed(),
        "checks": check_lines(r),
        "flags": r.flags,
    })
}

fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict} {} [{}]\n", c.name, c.anchor));
    }
    for (name, value) in &r.flags {
        out.push_str(&format!("flag {name} = {value}\n"));
    }
    out
}

fn read_doc(path: &Path) -> Result<AlgFile, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(AlgFile::parse(&text)?)
}

fn verify_doc<K: Field>(doc: &AlgFile, kind: Kind) -> Result<VerificationReport, UsageError> {
    Ok(algfile::verify(&doc.decode::<K>(kind)?)?)
}

fn cmd_verify(path: &Path, kind: Option<&str>, format: Format) -> Result<bool, UsageError> {
    let doc = read_doc(path)?;
    let kind = match kind {
        Some(k) => k.parse()?,
        None => doc.kind,
    };
    let report = match doc.field.validate()? {
        FieldSpec::Rationals => verify_doc::<Rational>(&doc, kind)?,
        FieldSpec::PrimeField { .. } => verify_doc::<Fp>(&doc, kind)?,
    };
    match format {
        Format::Json => {
            let mut v = report_json(&report);
            v["kind"] = json!(kind);
            v["field"] = json!(doc.field);
            emit(&(serde_json::to_string_pretty(&v).expect("report serializes") + "\n"));
        }
        Format::Text => {
            let verdict = if report.passed() { "pass" } else { "fail" };
            emit(&format!(
                "{}{kind} over {}: {verdict}\n",
                report_text(&report),
                doc.field
            ));
        }
    }
    Ok(report.passed())
}

fn builtin_group(name: &str) -> Option<Result<FiniteGroup, AlgebraError>> {
    if name == "S3" {
        return Some(Ok(FiniteGroup::symmetric3()));
    }
    let n = name.strip_prefix('Z')?.parse().ok()?;
    Some(FiniteGroup::cyclic(n))
}

fn cmd_enumerate(group: &str, max: usize, out: Option<&Path>) -> Result<bool, UsageError> {
    let g = match builtin_group(group) {
        Some(g) => g?,
        None => {
            let doc = read_doc(Path::new(group))?;
            let table = doc
                .tables
                .get("group")
                .ok_or_else(|| UsageError(format!("{group}: no \"group\" table")))?;
            FiniteGroup::from_table(table.clone())?
        }
    };
    let trusses = enumerate_skew_trusses(&g, max)?;
    let mut docs: Vec<serde_json::Value> = trusses
        .iter()
        .map(|t| {
            let doc = AlgFile::encode::<Rational>(&Structure::SetTruss(t.clone()), &());
            serde_json::to_value(doc).expect("algfile serializes")
        })
        .collect();
    docs.push(json!({"kind": "summary", "group": group, "count": trusses.len()}));
    let text = serde_json::to_string_pretty(&docs).expect("documents serialize") + "\n";
    match out {
        Some(p) => fs::write(p, text).map_err(|e| UsageError(format!("{}: {e}", p.display())))?,
        None => emit(&text),
    }
    Ok(true)
}

/// The value flowing between pipeline steps.
enum Stage<K: Field> {
    SetTruss(SkewTruss),
    Truss(HopfTruss<K>),
    Other(Structure<K>),
}

struct StepRecord {
    step: String,
    kind: Kind,
    report: VerificationReport,
    info: Vec<String>,
}

fn run_pipeline<K: Field>(doc: &AlgFile, steps: &[String]) -> Result<Vec<StepRecord>, UsageError> {
    let ctx = K::context(doc.field.validate()?)?;
    let mut stage = match doc.decode::<K>(doc.kind)? {
        Structure::SetTruss(t) => Stage::SetTruss(t),
        Structure::HopfTruss(h) => Stage::Truss(h),
        s => Stage::Other(s),
    };
    let mut origin_set: Option<SkewTruss> = None;
    let mut origin_truss: Option<HopfTruss<K>> = None;
    let mut records = Vec::new();
    for step in steps {
        let incompatible = |kind: Kind| UsageError(format!("step {step} does not apply to a {kind}"));
        let mut info = Vec::new();
        let (kind, report) = match (step.as_str(), stage) {
            ("linearize", Stage::SetTruss(t)) => {
                let h = linearize::<K>(&t, &ctx)?;
                origin_set = Some(t);
                let r = verify_hopf_truss(&h)?;
                stage = Stage::Truss(h);
                (Kind::HopfTruss, r)
            }
            ("grouplikes", Stage::Truss(h)) => {
                let t = truss_of_grouplikes(&h, GrouplikeMode::BasisScan)?;
                let mut r = trusslab::settruss::verify_skew_truss(&t)?;
                r.absorb("", counit_report(&h, GrouplikeMode::BasisScan)?);
                if let Some(orig) = &origin_set {
                    let same = orig == &t;
                    r.record("tables_recovered", "Thm.111", same, None);
                }
                stage = Stage::SetTruss(t);
                (Kind::SetTruss, r)
            }
            ("E", Stage::Truss(h)) => {
                let c = functor_e(&h)?;
                let r = verify_gic(&c)?;
                origin_truss = Some(h);
                stage = Stage::Other(Structure::Gic(c));
                (Kind::Gic, r)
            }
            ("Q", Stage::Other(Structure::Gic(c))) => {
                let h = functor_q(&c)?;
                let mut r = verify_hopf_truss(&h)?;
                if let Some(orig) = &origin_truss {
                    let same = orig == &h;
                    r.record("truss_recovered", "Thm.EGIHT", same, None);
                }
                stage = Stage::Truss(h);
                (Kind::HopfTruss, r)
            }
            ("roundtrip", Stage::Other(Structure::Gic(c))) => {
                let r = roundtrip_report(&c)?;
                stage = Stage::Other(Structure::Gic(c));
                (Kind::Gic, r)
            }
            ("roundtrip", Stage::Truss(h)) => {
                let c = functor_e(&h)?;
                let r = roundtrip_report(&c)?;
                stage = Stage::Truss(h);
                (Kind::Gic, r)
            }
            ("fundamental", Stage::Other(Structure::TrussHopfModule(m))) => {
                let iso = fundamental_iso(&m)?;
                info.push(format!(
                    "theta: {}x{}, coinvariants: {}",
                    iso.theta.cod(),
                    iso.theta.dom(),
                    iso.coinvariants.dim
                ));
                stage = Stage::Other(Structure::TrussHopfModule(m));
                (Kind::TrussHopfModule, iso.report)
            }
            ("verify", s) => {
                let structure = match s {
                    Stage::SetTruss(t) => Structure::SetTruss(t),
                    Stage::Truss(h) => Structure::HopfTruss(h),
                    Stage::Other(o) => o,
                };
                let r = algfile::verify(&structure)?;
                let kind = structure.kind();
                stage = match structure {
                    Structure::SetTruss(t) => Stage::SetTruss(t),
                    Structure::HopfTruss(h) => Stage::Truss(h),
                    o => Stage::Other(o),
                };
                (kind, r)
            }
            ("linearize" | "grouplikes" | "E" | "Q" | "roundtrip" | "fundamental", s) => {
                return Err(incompatible(match s {
                    Stage::SetTruss(_) => Kind::SetTruss,
                    Stage::Truss(_) => Kind::HopfTruss,
                    Stage::Other(o) => o.kind(),
                }))
            }
            (other, _) => return Err(UsageError(format!("unknown step {other:?}"))),
        };
        let failed = !report.passed();
        records.push(StepRecord {
            step: step.clone(),
            kind,
            report,
            info,
        });
        if failed {
            break;
        }
    }
    Ok(records)
}

fn cmd_pipeline(path: &Path, steps: &[String], format: Format) -> Result<bool, UsageError> {
    let doc = read_doc(path)?;
    let records = match doc.field.validate()? {
        FieldSpec::Rationals => run_pipeline::<Rational>(&doc, steps)?,
        FieldSpec::PrimeField { .. } => run_pipeline::<Fp>(&doc, steps)?,
    };
    let passed = records.iter().all(|r| r.report.passed());
    match format {
        Format::Json => {
            let steps: Vec<_> = records
                .iter()
                .map(|r| {
                    let mut v = report_json(&r.report);
                    v["step"] = json!(r.step);
                    v["kind"] = json!(r.kind);
                    v["info"] = json!(r.info);
                    v
                })
                .collect();
            let v = json!({"pass": passed, "steps": steps});
            emit(&(serde_json::to_string_pretty(&v).expect("report serializes") + "\n"));
        }
        Format::Text => {
            let mut text = String::new();
            for r in &records {
                let failures: Vec<_> = r.report.failures().map(|c| c.name.as_str()).collect();
                let verdict = if failures.is_empty() {
                    "pass".to_string()
                } else {
                    format!("FAIL ({})", failures.join(", "))
                };
                text += &format!(
                    "step {} -> {}: {} checks, {verdict}\n",
                    r.step,
                    r.kind,
                    r.report.checks.len()
                );
                for line in &r.info {
                    text += &format!("  {line}\n");
                }
            }
            emit(&text);
        }
    }
    Ok(passed)
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { path, kind, format } => cmd_verify(path, kind.as_deref(), *format),
        Command::Enumerate { group, max, out } => cmd_enumerate(group, *max, out.as_deref()),
        Command::Pipeline { path, steps, format } => cmd_pipeline(path, steps, *format),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("trusslab: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_group_names() {
        assert_eq!(builtin_group("Z3").unwrap().unwrap().order(), 3);
        assert_eq!(builtin_group("S3").unwrap().unwrap().order(), 6);
        assert!(builtin_group("Z0").unwrap().is_err());
        assert!(builtin_group("Zx").is_none());
        assert!(builtin_group("groups/q8.json").is_none());
    }

    #[test]
    fn residual_zero_tracks_matrix_entries() {
        assert!(residual_zero(&None));
        let zero = Residual::Matrix {
            cod: 1,
            dom: 1,
            entries: vec![vec!["0".into()]],
        };
        let nonzero = Residual::Matrix {
            cod: 1,
            dom: 1,
            entries: vec![vec!["1/2".into()]],
        };
        assert!(residual_zero(&Some(zero)));
        assert!(!residual_zero(&Some(nonzero)));
        assert!(!residual_zero(&Some(Residual::Witness(vec![0]))));
    }
}
