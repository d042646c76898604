//! Batteries of exact identity checks for the diagram calculus.
//!
//! Each suite builds families of candidate identities as diagram
//! expressions, evaluates both sides to morphisms, and records one
//! pass/fail entry per case.  Suites cover the generating relations of
//! the calculus, derived consequences, counting identities for the
//! underlying group actions, the diagram-to-morphism round trip, and a
//! randomized cross-check of the two composition engines.
//!
//! Reports serialize to JSON with an injectable timestamp so runs can be
//! reproduced byte-for-byte.

mod families;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::denseoracle::compose_via_dense;
use crate::hypercomb::{
    enumerate_hypercompositions, enumerate_tuples, group_order, stabilizer_order, SymmetryMode,
};
use crate::schurcat::{enumerate_orbit_matrices, Morphism};
use crate::webdsl::{normal_form, reduced_cfd, DiagramExpr};

/// Named collection of identity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Generating relations of the presentation.
    Defining,
    /// Identities derivable from the generating set.
    Derived,
    /// Supplementary thick-strand identities.
    Appendix,
    /// Scalar identities used by coefficient bookkeeping.
    Numeric,
    /// Canonical-diagram round trip: evaluate(reduced_cfd(A)) == A.
    Functor,
    /// Batched composition against the dense matrix engine.
    Oracle,
    /// Orbit/stabilizer and orbit-partition counting identities.
    Counting,
    /// Every suite above, concatenated.
    All,
}

impl Suite {
    /// All concrete suites, in report order.
    pub const CONCRETE: [Suite; 7] = [
        Suite::Defining,
        Suite::Derived,
        Suite::Appendix,
        Suite::Numeric,
        Suite::Functor,
        Suite::Oracle,
        Suite::Counting,
    ];

    /// Stable lowercase name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Defining => "defining",
            Suite::Derived => "derived",
            Suite::Appendix => "appendix",
            Suite::Numeric => "numeric",
            Suite::Functor => "functor",
            Suite::Oracle => "oracle",
            Suite::Counting => "counting",
            Suite::All => "all",
        }
    }

    /// Inverse of [`Suite::name`].
    pub fn parse(name: &str) -> Option<Suite> {
        match name {
            "defining" => Some(Suite::Defining),
            "derived" => Some(Suite::Derived),
            "appendix" => Some(Suite::Appendix),
            "numeric" => Some(Suite::Numeric),
            "functor" => Some(Suite::Functor),
            "oracle" => Some(Suite::Oracle),
            "counting" => Some(Suite::Counting),
            "all" => Some(Suite::All),
            _ => None,
        }
    }
}

/// Tunable limits shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Upper bound on the strand total of a relation's source object.
    pub max_degree: usize,
    /// Upper bound for the scalar identity checks.
    pub bound: usize,
    /// Largest half-degree for group-indexed checks.
    pub n: usize,
    /// Seed for the randomized oracle samples.
    pub seed: u64,
    /// Number of randomized oracle samples.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_degree: 8,
            bound: 20,
            n: 3,
            seed: 0,
            samples: 200,
        }
    }
}

/// Outcome of a single identity check.
#[derive(Debug, Clone)]
pub struct CaseResult {
    /// Human-readable case identifier, unique within a suite run.
    pub name: String,
    /// Numeric parameters the case was instantiated with.
    pub params: Vec<(String, u64)>,
    /// Whether the two sides agreed exactly.
    pub pass: bool,
    /// Canonical form of the left side; only recorded on failure.
    pub lhs_value: Option<String>,
    /// Canonical form of the right side; only recorded on failure.
    pub rhs_value: Option<String>,
}

impl CaseResult {
    fn pass(name: String, params: Vec<(String, u64)>) -> CaseResult {
        CaseResult {
            name,
            params,
            pass: true,
            lhs_value: None,
            rhs_value: None,
        }
    }

    fn fail(name: String, params: Vec<(String, u64)>, lhs: String, rhs: String) -> CaseResult {
        CaseResult {
            name,
            params,
            pass: false,
            lhs_value: Some(lhs),
            rhs_value: Some(rhs),
        }
    }
}

/// Results of one suite run, ready for JSON serialization.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    /// Name of the suite that ran.
    pub suite: String,
    /// Caller-supplied timestamp recorded verbatim.
    pub timestamp: String,
    /// One entry per check, in deterministic order.
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    /// Number of passing cases.
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    /// Number of failing cases.
    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    /// True when every case passed.
    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    /// Render the report as a JSON value.
    pub fn to_json(&self) -> Value {
        let cases: Vec<Value> = self
            .cases
            .iter()
            .map(|c| {
                let mut params = Map::new();
                for (key, value) in &c.params {
                    params.insert(key.clone(), json!(value));
                }
                let mut obj = Map::new();
                obj.insert("name".into(), json!(c.name));
                obj.insert("params".into(), Value::Object(params));
                obj.insert("pass".into(), json!(c.pass));
                if let Some(lhs) = &c.lhs_value {
                    obj.insert("lhs_value".into(), json!(lhs));
                }
                if let Some(rhs) = &c.rhs_value {
                    obj.insert("rhs_value".into(), json!(rhs));
                }
                Value::Object(obj)
            })
            .collect();
        json!({
            "suite": self.suite,
            "timestamp": self.timestamp,
            "cases": cases,
            "summary": {
                "total": self.cases.len(),
                "passed": self.passed(),
                "failed": self.failed(),
            },
        })
    }
}

/// A candidate identity between two diagram expressions.
#[derive(Debug, Clone)]
pub struct RelationCase {
    /// Family name plus parameters plus mirror-variant tag.
    pub name: String,
    /// Numeric parameters for the report.
    pub params: Vec<(String, u64)>,
    /// Left side.
    pub lhs: DiagramExpr,
    /// Right side.
    pub rhs: DiagramExpr,
}

impl RelationCase {
    /// Expand a case into its distinct mirror images.
    ///
    /// Both mirror symmetries of the plane preserve validity: the
    /// left-right flip is a covariant automorphism of the calculus and
    /// the upside-down flip is a contravariant one, so each of the four
    /// combinations yields a checkable identity.  Symmetric families
    /// collapse to fewer distinct variants; duplicates are dropped by
    /// comparing printed forms.
    fn variants(self) -> Vec<RelationCase> {
        let RelationCase {
            name,
            params,
            lhs,
            rhs,
        } = self;
        let candidates = [
            ("base", lhs.clone(), rhs.clone()),
            ("hflip", lhs.hflip(), rhs.hflip()),
            ("vflip", lhs.vflip(), rhs.vflip()),
            ("hvflip", lhs.hflip().vflip(), rhs.hflip().vflip()),
        ];
        let mut seen: BTreeSet<(String, String)> = BTreeSet::new();
        let mut out = Vec::new();
        for (tag, l, r) in candidates {
            if seen.insert((l.to_string(), r.to_string())) {
                out.push(RelationCase {
                    name: format!("{name} {tag}"),
                    params: params.clone(),
                    lhs: l,
                    rhs: r,
                });
            }
        }
        out
    }
}

fn run_relation_cases(cases: Vec<RelationCase>) -> Vec<CaseResult> {
    cases
        .into_iter()
        .flat_map(RelationCase::variants)
        .map(|case| {
            let lhs = case.lhs.evaluate();
            let rhs = case.rhs.evaluate();
            if lhs == rhs {
                CaseResult::pass(case.name, case.params)
            } else {
                CaseResult::fail(
                    case.name,
                    case.params,
                    normal_form(&lhs).to_string(),
                    normal_form(&rhs).to_string(),
                )
            }
        })
        .collect()
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn numeric_cases(bound: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    // Alternating row sums of the binomial triangle vanish except in
    // degree zero.  This is what collapses telescoping crossing
    // expansions to a single surviving term.
    for s in 0..=bound {
        let total: BigInt = (0..=s)
            .map(|u| {
                let term = binomial(s, u);
                if u % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum();
        let expected = if s == 0 { BigInt::one() } else { BigInt::zero() };
        let name = format!("alternating-binomial s={s}");
        let params = vec![("s".to_string(), s as u64)];
        if total == expected {
            out.push(CaseResult::pass(name, params));
        } else {
            out.push(CaseResult::fail(
                name,
                params,
                total.to_string(),
                expected.to_string(),
            ));
        }
    }
    // The signed doubling sum telescopes to one; it normalizes the
    // mirror-strand crossing expansion.
    for a in 1..=bound {
        let total: BigInt = (0..=a)
            .map(|t| {
                let term = BigInt::from(2u32).pow((a - t) as u32) * binomial(a, t);
                if t % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum();
        let name = format!("signed-doubling a={a}");
        let params = vec![("a".to_string(), a as u64)];
        if total == BigInt::one() {
            out.push(CaseResult::pass(name, params));
        } else {
            out.push(CaseResult::fail(
                name,
                params,
                total.to_string(),
                BigInt::one().to_string(),
            ));
        }
    }
    out
}

fn functor_cases(n_max: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let objects = enumerate_hypercompositions(n, SymmetryMode::Hyper);
        for target in &objects {
            for source in &objects {
                let basis = enumerate_orbit_matrices(target, source);
                let name = format!("functor n={n} Hom({source} -> {target})");
                let params = vec![("n".to_string(), n as u64)];
                let mut failure = None;
                for matrix in &basis {
                    let evaluated = reduced_cfd(matrix).evaluate();
                    let expected = Morphism::basis(matrix.clone());
                    if evaluated != expected {
                        failure = Some((
                            normal_form(&evaluated).to_string(),
                            normal_form(&expected).to_string(),
                        ));
                        break;
                    }
                }
                match failure {
                    None => out.push(CaseResult::pass(name, params)),
                    Some((lhs, rhs)) => out.push(CaseResult::fail(name, params, lhs, rhs)),
                }
            }
        }
    }
    out
}

fn oracle_exhaustive_case(
    mode: SymmetryMode,
    lambda: &crate::hypercomb::Hypercomposition,
    mu: &crate::hypercomb::Hypercomposition,
    nu: &crate::hypercomb::Hypercomposition,
) -> Result<(), (String, String)> {
    for a in enumerate_orbit_matrices(lambda, mu) {
        for b in enumerate_orbit_matrices(mu, nu) {
            let f = Morphism::basis(a.clone());
            let g = Morphism::basis(b.clone());
            let batched = f.compose(&g).expect("objects line up");
            let dense = compose_via_dense(&f, &g).expect("objects line up");
            if batched != dense {
                return Err((
                    format!("{mode} batched {batched}"),
                    format!("{mode} dense {dense}"),
                ));
            }
        }
    }
    Ok(())
}

fn oracle_cases(config: &SuiteConfig) -> Vec<CaseResult> {
    let mut out = Vec::new();
    // Exhaustive sweep over every basis pair in half-degree 2.
    for mode in [SymmetryMode::Hyper, SymmetryMode::Plain] {
        let objects = enumerate_hypercompositions(2, mode);
        for lambda in &objects {
            for mu in &objects {
                for nu in &objects {
                    let name = format!("oracle exhaustive {mode} {lambda}∘{mu}∘{nu}");
                    let params = vec![("n".to_string(), 2)];
                    match oracle_exhaustive_case(mode, lambda, mu, nu) {
                        Ok(()) => out.push(CaseResult::pass(name, params)),
                        Err((lhs, rhs)) => out.push(CaseResult::fail(name, params, lhs, rhs)),
                    }
                }
            }
        }
    }
    // Seeded random sampling in the configured half-degree.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let objects = enumerate_hypercompositions(config.n, SymmetryMode::Hyper);
    for index in 0..config.samples {
        let lambda = &objects[rng.random_range(0..objects.len())];
        let mu = &objects[rng.random_range(0..objects.len())];
        let nu = &objects[rng.random_range(0..objects.len())];
        let left_basis = enumerate_orbit_matrices(lambda, mu);
        let right_basis = enumerate_orbit_matrices(mu, nu);
        let a = &left_basis[rng.random_range(0..left_basis.len())];
        let b = &right_basis[rng.random_range(0..right_basis.len())];
        let f = Morphism::basis(a.clone());
        let g = Morphism::basis(b.clone());
        let batched = f.compose(&g).expect("objects line up");
        let dense = compose_via_dense(&f, &g).expect("objects line up");
        let name = format!("oracle sample {index} {lambda}∘{mu}∘{nu}");
        let params = vec![
            ("index".to_string(), index as u64),
            ("n".to_string(), config.n as u64),
            ("seed".to_string(), config.seed),
        ];
        if batched == dense {
            out.push(CaseResult::pass(name, params));
        } else {
            out.push(CaseResult::fail(
                name,
                params,
                batched.to_string(),
                dense.to_string(),
            ));
        }
    }
    out
}

fn counting_cases(n_max: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for mode in [SymmetryMode::Hyper, SymmetryMode::Plain] {
        for n in 1..=n_max {
            let objects = enumerate_hypercompositions(n, mode);
            let order = group_order(n, mode);

            // Orbit-stabilizer: tuple count times stabilizer order
            // recovers the group order for every object.
            let name = format!("counting orbit-stabilizer {mode} n={n}");
            let params = vec![("n".to_string(), n as u64)];
            let mut failure = None;
            for lambda in &objects {
                let tuples = enumerate_tuples(lambda);
                let product = BigInt::from(tuples.len()) * BigInt::from(stabilizer_order(lambda));
                let expected = BigInt::from(order.clone());
                if product != expected {
                    failure = Some((
                        format!("{lambda}: {product}"),
                        format!("{lambda}: {expected}"),
                    ));
                    break;
                }
            }
            match failure {
                None => out.push(CaseResult::pass(name, params.clone())),
                Some((lhs, rhs)) => out.push(CaseResult::fail(name, params.clone(), lhs, rhs)),
            }

            // Orbit partition: basis matrices tile the set of tuple
            // pairs, so their realization counts sum to the total.
            let name = format!("counting orbit-partition {mode} n={n}");
            let mut failure = None;
            'outer: for lambda in &objects {
                let rows = enumerate_tuples(lambda);
                for mu in &objects {
                    let cols = enumerate_tuples(mu);
                    let mut realized: usize = 0;
                    for matrix in enumerate_orbit_matrices(lambda, mu) {
                        let count = rows
                            .iter()
                            .flat_map(|i| cols.iter().map(move |j| (i, j)))
                            .filter(|(i, j)| {
                                crate::schurcat::count_grid(i, j) == *matrix.entries()
                            })
                            .count();
                        realized += count;
                    }
                    if realized != rows.len() * cols.len() {
                        failure = Some((
                            format!("Hom({mu} -> {lambda}): {realized}"),
                            format!("Hom({mu} -> {lambda}): {}", rows.len() * cols.len()),
                        ));
                        break 'outer;
                    }
                }
            }
            match failure {
                None => out.push(CaseResult::pass(name, params)),
                Some((lhs, rhs)) => out.push(CaseResult::fail(name, params, lhs, rhs)),
            }
        }
    }
    out
}

fn suite_cases(suite: Suite, config: &SuiteConfig) -> Vec<CaseResult> {
    match suite {
        Suite::Defining => run_relation_cases(families::defining_cases(config)),
        Suite::Derived => run_relation_cases(families::derived_cases(config)),
        Suite::Appendix => run_relation_cases(families::appendix_cases(config)),
        Suite::Numeric => numeric_cases(config.bound),
        Suite::Functor => functor_cases(config.n),
        Suite::Oracle => oracle_cases(config),
        Suite::Counting => counting_cases(config.n),
        Suite::All => Suite::CONCRETE
            .iter()
            .flat_map(|s| suite_cases(*s, config))
            .collect(),
    }
}

/// Run a suite and collect its report.
///
/// The timestamp is recorded verbatim so callers can inject a fixed
/// value for reproducible output.
pub fn run_suite(suite: Suite, config: &SuiteConfig, timestamp: String) -> SuiteReport {
    SuiteReport {
        suite: suite.name().to_string(),
        timestamp,
        cases: suite_cases(suite, config),
    }
}
