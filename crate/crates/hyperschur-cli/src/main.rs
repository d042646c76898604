//! Command-line front end: enumeration, composition, diagram
//! evaluation, normalization, and verification suites.
//!
//! Exit codes: 0 on success (and all checks passing), 1 when a
//! verification check fails, 2 on usage or parse errors.

use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperschur::denseoracle::compose_via_dense;
use hyperschur::hypercomb::{
    enumerate_hypercompositions, group_order, Hypercomposition, SymmetryMode, DEFAULT_GROUP_CAP,
};
use hyperschur::relationsuite::{run_suite, Suite, SuiteConfig};
use hyperschur::schurcat::{enumerate_orbit_matrices, Morphism, OrbitMatrix};
use hyperschur::webdsl::{normal_form, parse_expr};

#[derive(Parser)]
#[command(
    name = "hyperschur",
    version,
    about = "Exact arithmetic for the mirrored Schur category and its diagram calculus",
    after_help = "Set HYPERSCHUR_GROUP_CAP to raise or lower the guard on group-indexed \
                  enumeration (default 1000000)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum ModeArg {
    /// Mirrored strands: palindromic objects with an even middle part.
    #[default]
    Hyper,
    /// Ordinary strands: plain compositions.
    Plain,
}

impl From<ModeArg> for SymmetryMode {
    fn from(mode: ModeArg) -> SymmetryMode {
        match mode {
            ModeArg::Hyper => SymmetryMode::Hyper,
            ModeArg::Plain => SymmetryMode::Plain,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List all objects of one half-degree.
    Objects {
        /// Half-degree: hyper objects sum to 2n, plain objects to n.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// List the basis of morphisms from --source to --target.
    Basis {
        /// Target object, written like "(1,2,1)".
        #[arg(long)]
        target: String,
        /// Source object, written like "(1,2,1)".
        #[arg(long)]
        source: String,
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Compose two basis morphisms given as JSON count matrices.
    ///
    /// Objects are inferred from row sums (target) and column sums
    /// (source); --f is applied after --g.
    Compose {
        /// Upper factor, e.g. "[[0,1,0],[1,0,1],[0,1,0]]".
        #[arg(long)]
        f: String,
        /// Lower factor, in the same format.
        #[arg(long)]
        g: String,
        /// Cross-check the result against the dense matrix engine.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a diagram expression to a morphism in the basis.
    Eval {
        /// Expression such as "[S(3,6)] ; [M(3,6)]" or "2*[x(1,1)]".
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a diagram expression as a canonical sum of reduced
    /// diagrams.
    Normalize {
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite and report per-case results.
    Verify {
        /// One of: defining, derived, appendix, numeric, functor,
        /// oracle, counting, all.
        #[arg(long)]
        suite: String,
        /// Strand budget for relation sources.
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        /// Upper bound for the scalar identities.
        #[arg(long, default_value_t = 20)]
        bound: usize,
        /// Largest half-degree for group-indexed checks.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Seed for the randomized oracle samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of randomized oracle samples.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Timestamp recorded in the report; defaults to the current
        /// Unix time. Inject a fixed value for reproducible output.
        #[arg(long)]
        timestamp: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

/// Print one line to stdout, exiting quietly if the consumer closed
/// the pipe (e.g. `hyperschur verify ... | head`).
fn emit(line: impl std::fmt::Display) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{line}").is_err() {
        std::process::exit(0);
    }
}

/// A user-facing failure: message plus process exit code.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            code: 2,
        }
    }

    fn check(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            code: 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Objects { n, mode, json } => cmd_objects(n, mode.into(), json),
        Command::Basis {
            target,
            source,
            mode,
            json,
        } => cmd_basis(&target, &source, mode.into(), json),
        Command::Compose {
            f,
            g,
            oracle,
            mode,
            json,
        } => cmd_compose(&f, &g, oracle, mode.into(), json),
        Command::Eval { expr, mode, json } => cmd_eval(&expr, mode.into(), json),
        Command::Normalize { expr, mode, json } => cmd_normalize(&expr, mode.into(), json),
        Command::Verify {
            suite,
            max_degree,
            bound,
            n,
            seed,
            samples,
            timestamp,
            json,
        } => {
            let config = SuiteConfig {
                max_degree,
                bound,
                n,
                seed,
                samples,
            };
            cmd_verify(&suite, &config, timestamp, json)
        }
    }
}

/// The group-order guard for tuple-indexed enumeration, overridable via
/// the HYPERSCHUR_GROUP_CAP environment variable.
fn group_cap() -> u64 {
    std::env::var("HYPERSCHUR_GROUP_CAP")
        .ok()
        .and_then(|raw| raw.parse().ok())
        .unwrap_or(DEFAULT_GROUP_CAP)
}

fn check_cap(n: usize, mode: SymmetryMode) -> Result<(), Failure> {
    let order = group_order(n, mode);
    let cap = group_cap();
    if order > cap.into() {
        return Err(Failure::usage(format!(
            "group order {order} at half-degree {n} exceeds the cap {cap}; \
             set HYPERSCHUR_GROUP_CAP to raise it"
        )));
    }
    Ok(())
}

fn parse_object(text: &str, mode: SymmetryMode) -> Result<Hypercomposition, Failure> {
    Hypercomposition::parse(text, mode).map_err(|e| Failure::usage(e.to_string()))
}

fn morphism_json(m: &Morphism) -> Value {
    let terms: Vec<Value> = m
        .terms()
        .map(|(matrix, coeff)| {
            json!({
                // Decimal strings keep arbitrary-precision coefficients
                // exact for JSON consumers.
                "coeff": coeff.to_string(),
                "matrix": matrix.to_rows(),
            })
        })
        .collect();
    json!({
        "mode": m.mode().to_string(),
        "source": m.source().to_string(),
        "target": m.target().to_string(),
        "terms": terms,
    })
}

fn print_value(value: &Value) {
    emit(serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn cmd_objects(n: usize, mode: SymmetryMode, json: bool) -> Result<(), Failure> {
    let objects = enumerate_hypercompositions(n, mode);
    if json {
        let rendered: Vec<String> = objects.iter().map(|o| o.to_string()).collect();
        print_value(&json!({
            "mode": mode.to_string(),
            "n": n,
            "count": rendered.len(),
            "objects": rendered,
        }));
    } else {
        for object in &objects {
            emit(object);
        }
    }
    Ok(())
}

fn cmd_basis(target: &str, source: &str, mode: SymmetryMode, json: bool) -> Result<(), Failure> {
    let target = parse_object(target, mode)?;
    let source = parse_object(source, mode)?;
    if target.n() != source.n() {
        return Err(Failure::usage(format!(
            "objects {target} and {source} have different degrees; \
             every morphism between them is zero"
        )));
    }
    check_cap(target.n(), mode)?;
    let basis = enumerate_orbit_matrices(&target, &source);
    if json {
        let matrices: Vec<Vec<Vec<usize>>> = basis.iter().map(OrbitMatrix::to_rows).collect();
        print_value(&json!({
            "mode": mode.to_string(),
            "target": target.to_string(),
            "source": source.to_string(),
            "count": matrices.len(),
            "matrices": matrices,
        }));
    } else {
        emit(format!(
            "{} basis elements for Hom({source} -> {target})",
            basis.len()
        ));
        for matrix in &basis {
            emit(matrix);
        }
    }
    Ok(())
}

fn parse_count_matrix(
    label: &str,
    text: &str,
    mode: SymmetryMode,
) -> Result<OrbitMatrix, Failure> {
    let rows: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| {
        Failure::usage(format!(
            "--{label} expects a JSON matrix of non-negative integers: {e}"
        ))
    })?;
    if rows.is_empty() {
        return Err(Failure::usage(format!("--{label} matrix is empty")));
    }
    let row_sums: Vec<usize> = rows.iter().map(|r| r.iter().sum()).collect();
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(Failure::usage(format!("--{label} matrix is ragged")));
    }
    let col_sums: Vec<usize> = (0..width)
        .map(|c| rows.iter().map(|r| r[c]).sum())
        .collect();
    let target = Hypercomposition::new(row_sums, mode).map_err(|e| {
        Failure::usage(format!("--{label} row sums are not a valid object: {e}"))
    })?;
    let source = Hypercomposition::new(col_sums, mode).map_err(|e| {
        Failure::usage(format!("--{label} column sums are not a valid object: {e}"))
    })?;
    OrbitMatrix::new(rows, target, source)
        .map_err(|e| Failure::usage(format!("--{label} is not a basis matrix: {e}")))
}

fn cmd_compose(
    f_text: &str,
    g_text: &str,
    oracle: bool,
    mode: SymmetryMode,
    json: bool,
) -> Result<(), Failure> {
    let f = parse_count_matrix("f", f_text, mode)?;
    let g = parse_count_matrix("g", g_text, mode)?;
    check_cap(f.target().n(), mode)?;
    let f = Morphism::basis(f);
    let g = Morphism::basis(g);
    let composed = f
        .compose(&g)
        .map_err(|e| Failure::usage(e.to_string()))?;
    if oracle {
        let dense = compose_via_dense(&f, &g).map_err(|e| Failure::usage(e.to_string()))?;
        if dense != composed {
            return Err(Failure::check(format!(
                "composition engines disagree: batched {composed} vs dense {dense}"
            )));
        }
    }
    if json {
        let mut value = morphism_json(&composed);
        if let Value::Object(map) = &mut value {
            map.insert("oracle_checked".into(), json!(oracle));
        }
        print_value(&value);
    } else {
        emit(&composed);
        if oracle {
            emit("oracle agreement confirmed");
        }
    }
    Ok(())
}

fn cmd_eval(expr: &str, mode: SymmetryMode, json: bool) -> Result<(), Failure> {
    let parsed = parse_expr(expr, mode).map_err(|e| Failure::usage(e.to_string()))?;
    check_cap(parsed.source().n(), mode)?;
    let value = parsed.evaluate();
    if json {
        print_value(&morphism_json(&value));
    } else {
        emit(&value);
    }
    Ok(())
}

fn cmd_normalize(expr: &str, mode: SymmetryMode, json: bool) -> Result<(), Failure> {
    let parsed = parse_expr(expr, mode).map_err(|e| Failure::usage(e.to_string()))?;
    check_cap(parsed.source().n(), mode)?;
    let normalized = normal_form(&parsed.evaluate());
    if json {
        print_value(&json!({
            "mode": mode.to_string(),
            "source": normalized.source().to_string(),
            "target": normalized.target().to_string(),
            "expression": normalized.to_string(),
        }));
    } else {
        emit(&normalized);
    }
    Ok(())
}

fn cmd_verify(
    suite_name: &str,
    config: &SuiteConfig,
    timestamp: Option<String>,
    json: bool,
) -> Result<(), Failure> {
    let suite = Suite::parse(suite_name).ok_or_else(|| {
        Failure::usage(format!(
            "unknown suite {suite_name:?}; expected one of defining, derived, appendix, \
             numeric, functor, oracle, counting, all"
        ))
    })?;
    let timestamp = timestamp.unwrap_or_else(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .expect("clock after 1970")
            .as_secs()
            .to_string()
    });
    let report = run_suite(suite, config, timestamp);
    if json {
        print_value(&report.to_json());
    } else {
        for case in &report.cases {
            if case.pass {
                emit(format!("PASS {}", case.name));
            } else {
                emit(format!(
                    "FAIL {} ({} != {})",
                    case.name,
                    case.lhs_value.as_deref().unwrap_or("?"),
                    case.rhs_value.as_deref().unwrap_or("?")
                ));
            }
        }
        emit(format!(
            "{}: {} passed, {} failed",
            report.suite,
            report.passed(),
            report.failed()
        ));
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::check(format!(
            "{} of {} cases failed",
            report.failed(),
            report.cases.len()
        )))
    }
}
