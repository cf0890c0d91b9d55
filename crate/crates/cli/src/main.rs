mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use qha_core::bounds::{Analysis, DEFAULT_MAX_SIMPLES};
use qha_core::check::{self, CheckConfig, Fault};
use qha_core::corpus::Family;
use qha_core::pathmod::{HomDim, SimpleSet};
use qha_core::presentation::{parse, validate};
use qha_core::{Algebra, AlgebraError, DEFAULT_BASIS_LIMIT};

use report::Report;

const BASIS_LIMIT_VAR: &str = "QHA_BASIS_LIMIT";

#[derive(Parser)]
#[command(name = "qha", version, about = "Homological invariants and derived-dimension bounds for monomial quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, Loewy length and presentation size.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Projective and injective dimensions of the simple modules.
    Simples {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Radical layer lengths of the indecomposable projectives for a set V.
    Layerlen {
        file: PathBuf,
        /// Comma-separated vertex names; empty for V = ∅.
        #[arg(long = "V", value_name = "LIST", num_args = 0..=1, default_missing_value = "")]
        v: String,
        #[arg(long)]
        json: bool,
    },
    /// Bounds for a given V, or for the best V found by exhaustive search.
    #[command(group(ArgGroup::new("choice").required(true).args(["v", "optimize"])))]
    Bounds {
        file: PathBuf,
        #[arg(long = "V", value_name = "LIST", num_args = 0..=1, default_missing_value = "")]
        v: Option<String>,
        #[arg(long)]
        optimize: bool,
        /// Largest number of simples the search accepts.
        #[arg(long, default_value_t = DEFAULT_MAX_SIMPLES)]
        max_simples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the presentation of a member of a built-in family.
    Gen {
        /// example41 or example42
        family: String,
        #[arg(long)]
        m: usize,
    },
    /// Run the invariant and cross-engine suite.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
        /// Corrupt the layer-length engine to confirm the suite notices.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// An error message with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        let code = if e == AlgebraError::InfiniteDimensional { 2 } else { 1 };
        Self { code, message: e.to_string() }
    }
}

fn basis_limit() -> Result<usize, Failure> {
    match std::env::var(BASIS_LIMIT_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::input(format!("{BASIS_LIMIT_VAR} must be a positive integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_BASIS_LIMIT),
    }
}

fn load(file: &Path) -> Result<Algebra, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::input(format!("{}: {e}", file.display())))?;
    let presentation = parse(&text).map_err(|e| Failure::input(format!("{}: {e}", file.display())))?;
    let valid = validate(&presentation).map_err(|e| Failure::input(format!("{}: {e}", file.display())))?;
    for w in &valid.warnings {
        eprintln!("warning: {w}");
    }
    Ok(Algebra::build(&valid.presentation, basis_limit()?)?)
}

fn vertex_set(alg: &Algebra, list: &str) -> Result<SimpleSet, Failure> {
    let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(SimpleSet::from_names(alg, &names)?)
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
    } else {
        print!("{}", report.render_text());
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { file, json } => {
            let alg = load(&file)?;
            emit(&Report { algebra: Some(report::algebra_stats(&alg)), ..Report::default() }, json);
        }
        Command::Simples { file, json } => {
            let alg = load(&file)?;
            let an = Analysis::new(&alg);
            emit(
                &Report { simples: Some(report::simples(&an)), classes: Some(report::classes(&an)), ..Report::default() },
                json,
            );
        }
        Command::Layerlen { file, v, json } => {
            let alg = load(&file)?;
            let v = vertex_set(&alg, &v)?;
            emit(&Report { layer: Some(report::layer(&alg, &v)), ..Report::default() }, json);
        }
        Command::Bounds { file, v, optimize, max_simples, json } => {
            let alg = load(&file)?;
            let an = Analysis::new(&alg);
            let mut out = Report {
                algebra: Some(report::algebra_stats(&alg)),
                simples: Some(report::simples(&an)),
                classes: Some(report::classes(&an)),
                ..Report::default()
            };
            let classical = an.classical();
            let (chosen, best) = if optimize {
                let db = an.optimize_db(max_simples).map_err(|e| Failure::input(e.to_string()))?;
                let dsg = an.optimize_dsg(max_simples).map_err(|e| Failure::input(e.to_string()))?;
                out.optimize = Some(report::optimize(&alg, &db, &dsg));
                let headline = report::headline(HomDim::Finite(db.value as i64), Some(dsg.value), &classical);
                (db.v.clone(), Some(headline))
            } else {
                (vertex_set(&alg, v.as_deref().unwrap_or(""))?, None)
            };
            let r = an.report(&chosen);
            out.layer = Some(report::layer(&alg, &chosen));
            out.bounds = Some(report::bounds(&alg, &r));
            out.headline = Some(best.unwrap_or_else(|| report::headline(r.db_bound, r.dsg_bound, &classical)));
            emit(&out, json);
        }
        Command::Gen { family, m } => {
            let family: Family = family.parse().map_err(|e: qha_core::corpus::FamilyError| Failure::input(e.to_string()))?;
            print!("{}", family.generate(m).map_err(|e| Failure::input(e.to_string()))?);
        }
        Command::Check { file, seed, cases, inject_fault } => {
            let alg = load(&file)?;
            let fault = if inject_fault { Fault::LayerLengthOffByOne } else { Fault::None };
            let config = CheckConfig { seed, cases, fault, ..CheckConfig::default() };
            let result = check::run_checks(&alg, &config);
            for (property, n) in &result.tallies {
                let failed = result.violations.iter().any(|v| v.property == *property);
                println!("{:<5} {property} ({n} checks)", if failed { "FAIL" } else { "ok" });
            }
            if !result.passed() {
                for v in &result.violations {
                    println!("{v}");
                    println!("  reproduce: qha check {} --seed {} --cases 1", file.display(), v.seed);
                }
                return Err(Failure { code: 3, message: format!("{} property violation(s)", result.violations.len()) });
            }
            println!("all properties hold (seed {seed}, {cases} cases)");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
