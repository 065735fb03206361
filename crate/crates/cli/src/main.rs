use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jordan_core::constructors::{
    albert_algebra, assoc_lie, full_matrix_jordan, halfspin, hermitian_jordan, nilpotent_two_dim, skew_lie, so_alpha,
    spin_factor,
};
use jordan_core::derivations::{der, inn, tder};
use jordan_core::io::{algebra_to_json, load_algebra, Algebra};
use jordan_core::scalar::parse_rational;
use jordan_core::verify::{run_suites, Config, Tier, SUITES};
use jordan_core::{Error, LieTable, OperatorSubspace, RowBasis, Solver, Strategy, Q};

#[derive(Parser)]
#[command(name = "jordan", version, about = "Exact derivation algebras of Jordan and Lie algebras")]
struct Cli {
    /// Nullspace strategy; auto switches to modular for algebras of dim >= 20.
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,

    /// Number of primes the modular strategy may use.
    #[arg(long, global = true, default_value_t = 32)]
    prime_budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Dense,
    Modular,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Fast,
    Slow,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraType {
    /// Spin factor with parameters --alpha.
    Spin,
    /// k×k matrices under the symmetrized product.
    Full,
    /// Symmetric k×k matrices.
    Hermitian,
    Albert,
    #[value(name = "example-3.2")]
    Nilpotent,
    Halfspin,
    /// Lie algebra so_alpha(n) with parameters --alpha.
    SoAlpha,
    /// Lie algebra gl(k).
    Gl,
    /// Lie algebra so(k).
    So,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and write it as JSON.
    Construct {
        #[arg(long = "type", value_enum)]
        kind: AlgebraType,
        /// Comma-separated nonzero rationals, e.g. 1,1,-1/2.
        #[arg(long)]
        alpha: Option<String>,
        /// Matrix size for full, hermitian, gl and so.
        #[arg(long, short)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute invariants of an algebra file.
    Analyze {
        file: PathBuf,
        /// Comma-separated subset of der, tder, inn, center, unit, lie.
        #[arg(long, default_value = "der,tder,inn,center,unit,lie")]
        what: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exit status 0 iff every check passes.
    Verify {
        /// Suite ids (2.2 2.6 2.8 2.10 3.4 3.7 4.4 4.7) or `all`.
        #[arg(required = true)]
        suites: Vec<String>,
        #[arg(long, value_enum, default_value_t = TierArg::Fast)]
        tier: TierArg,
        /// Seed for the randomly drawn parameters.
        #[arg(long, default_value_t = Config::default().seed)]
        seed: u64,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_alpha(raw: &str) -> Result<Vec<Q>, Error> {
    raw.split(',')
        .map(|s| parse_rational(s.trim()).ok_or_else(|| Error::Parse(format!("not an exact rational: {s:?}"))))
        .collect()
}

fn construct(kind: AlgebraType, alpha: Option<&str>, k: Option<usize>) -> Result<Algebra, Error> {
    let alpha = || alpha.ok_or_else(|| Error::BadParameter("--alpha is required".into())).and_then(parse_alpha);
    let k = || k.ok_or_else(|| Error::BadParameter("--k is required".into()));
    Ok(match kind {
        AlgebraType::Spin => Algebra::Jordan(spin_factor(&alpha()?)?),
        AlgebraType::Full => Algebra::Jordan(full_matrix_jordan(k()?)?.0),
        AlgebraType::Hermitian => Algebra::Jordan(hermitian_jordan(k()?)?.0),
        AlgebraType::Albert => Algebra::Jordan(albert_algebra()),
        AlgebraType::Nilpotent => Algebra::Jordan(nilpotent_two_dim()),
        AlgebraType::Halfspin => Algebra::Jordan(halfspin()),
        AlgebraType::SoAlpha => {
            let a = alpha()?;
            Algebra::Lie(so_alpha(a.len(), &a)?)
        }
        AlgebraType::Gl => Algebra::Lie(assoc_lie(k()?)?),
        AlgebraType::So => Algebra::Lie(skew_lie(k()?)?),
    })
}

fn basis_json(b: &RowBasis<Q>) -> Value {
    let vectors: Vec<Vec<String>> = b.vectors().iter().map(|v| v.iter().map(ToString::to_string).collect()).collect();
    json!({ "dim": b.dim(), "basis": vectors })
}

fn space_json(s: &OperatorSubspace<Q>) -> Value {
    basis_json(s.basis())
}

fn simplicity_json(l: &LieTable<Q>, solver: &Solver) -> Result<Value, Error> {
    let v = l.simplicity(solver)?;
    Ok(json!({
        "dim": l.dim(),
        "status": v.status.to_string(),
        "killing_nondegenerate": v.certificate.killing_nondegenerate,
        "centroid_dim": v.certificate.centroid_dim,
        "witness": v.witness.as_ref().map(basis_json),
    }))
}

fn analyze(a: &Algebra, what: &[&str], solver: &Solver) -> Result<Value, Error> {
    let mut report = serde_json::Map::new();
    report.insert("kind".into(), json!(a.kind()));
    report.insert("dim".into(), json!(a.table().dim()));
    for &w in what {
        let v = match (w, a) {
            ("der", Algebra::Jordan(j)) => space_json(&der(j, solver)?),
            ("tder", Algebra::Jordan(j)) => space_json(&tder(j, solver)?),
            ("inn", Algebra::Jordan(j)) => space_json(&inn(j)?),
            ("center", Algebra::Jordan(j)) => basis_json(&j.center()),
            ("unit", Algebra::Jordan(j)) => {
                json!(j.unit().map(|u| u.iter().map(ToString::to_string).collect::<Vec<_>>()))
            }
            ("lie", Algebra::Jordan(j)) => simplicity_json(&LieTable::from_operators(&der(j, solver)?)?, solver)?,
            ("der", Algebra::Lie(l)) => space_json(&l.der(solver)?),
            ("tder", Algebra::Lie(l)) => space_json(&l.tder(solver)?),
            ("inn", Algebra::Lie(l)) => space_json(&l.ad_span()),
            ("center", Algebra::Lie(l)) => basis_json(&l.center()),
            ("unit", Algebra::Lie(_)) => Value::Null,
            ("lie", Algebra::Lie(l)) => simplicity_json(l, solver)?,
            (other, _) => return Err(Error::BadParameter(format!("unknown analysis {other:?}"))),
        };
        report.insert(w.to_string(), v);
    }
    Ok(Value::Object(report))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let solver = Solver {
        strategy: match cli.strategy {
            StrategyArg::Dense => Strategy::Dense,
            StrategyArg::Modular => Strategy::Modular,
            StrategyArg::Auto => Strategy::Auto,
        },
        prime_budget: cli.prime_budget,
    };
    match cli.command {
        Command::Construct { kind, alpha, k, out } => {
            let a = construct(kind, alpha.as_deref(), k)?;
            emit(&algebra_to_json(&a), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { file, what, out } => {
            let a = load_algebra(&file)?;
            let what: Vec<&str> = what.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            emit(&pretty(&analyze(&a, &what, &solver)?), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suites, tier, seed, timing, out } => {
            for s in &suites {
                if s != "all" && !SUITES.contains(&s.as_str()) {
                    return Err(Error::BadParameter(format!("unknown suite {s:?}")));
                }
            }
            let cfg = Config {
                solver,
                tier: match tier {
                    TierArg::Fast => Tier::Fast,
                    TierArg::Slow => Tier::Slow,
                },
                seed,
                timing,
            };
            let ids: Vec<&str> = suites.iter().map(String::as_str).collect();
            let reports = run_suites(&ids, &cfg)?;
            for r in &reports {
                let failed = r.checks.iter().filter(|c| !c.pass).count();
                let verdict = if failed == 0 { "pass" } else { "FAIL" };
                eprintln!("{} {verdict} ({} checks, {failed} failed)", r.theorem_id, r.checks.len());
            }
            emit(&pretty(&reports), out.as_ref())?;
            Ok(if reports.iter().all(|r| r.passed()) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
