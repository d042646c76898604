//! End-to-end acceptance checks.
//!
//! Each test pins one externally meaningful behavior: the frozen golden
//! values for small objects, the layered-diagram goldens, and the full
//! default-strength verification suites.  Run with
//! `cargo test --test acceptance -- --nocapture` to see one summary line
//! per check.

use num_bigint::BigInt;

use hyperschur::denseoracle::dense_morphism;
use hyperschur::hypercomb::{
    enumerate_hypercompositions, enumerate_tuples, Hypercomposition, SymmetryMode,
};
use hyperschur::relationsuite::{run_suite, Suite, SuiteConfig};
use hyperschur::schurcat::{enumerate_orbit_matrices, Morphism};
use hyperschur::webdsl::{normal_form, parse_expr};

fn hyper(text: &str) -> Hypercomposition {
    Hypercomposition::parse(text, SymmetryMode::Hyper).expect("valid object")
}

fn plain(text: &str) -> Hypercomposition {
    Hypercomposition::parse(text, SymmetryMode::Plain).expect("valid object")
}

fn big_rows(rows: &[[i32; 4]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

fn assert_suite_passes(suite: Suite, config: &SuiteConfig) -> usize {
    let report = run_suite(suite, config, "acceptance".to_string());
    let failures: Vec<String> = report
        .cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| {
            format!(
                "{}: {} != {}",
                c.name,
                c.lhs_value.as_deref().unwrap_or("?"),
                c.rhs_value.as_deref().unwrap_or("?")
            )
        })
        .collect();
    assert!(failures.is_empty(), "failing cases:\n{}", failures.join("\n"));
    report.cases.len()
}

/// Half-degree 2 in mirrored mode: the object list, the labelled-tuple
/// set, the three-element endomorphism basis, and the square of the
/// last basis element all match their frozen values.
#[test]
fn mirrored_degree_two_basis_and_square() {
    let objects: Vec<String> = enumerate_hypercompositions(2, SymmetryMode::Hyper)
        .iter()
        .map(|o| o.to_string())
        .collect();
    assert_eq!(objects, ["(4)", "(1,2,1)", "(2,0,2)", "(1,1,0,1,1)"]);

    let lambda = hyper("(1,2,1)");
    let tuples: Vec<Vec<usize>> = enumerate_tuples(&lambda)
        .iter()
        .map(|t| t.labels().to_vec())
        .collect();
    assert_eq!(
        tuples,
        [
            vec![1, 2, 2, 3],
            vec![2, 1, 3, 2],
            vec![2, 3, 1, 2],
            vec![3, 2, 2, 1]
        ]
    );

    let basis = enumerate_orbit_matrices(&lambda, &lambda);
    let rows: Vec<Vec<Vec<usize>>> = basis.iter().map(|m| m.to_rows()).collect();
    assert_eq!(
        rows,
        [
            vec![vec![0, 0, 1], vec![0, 2, 0], vec![1, 0, 0]],
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]],
            vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 1]],
        ]
    );

    let middle = Morphism::basis(basis[1].clone());
    let square = middle.compose(&middle).expect("endomorphisms compose");
    let expected = Morphism::basis(basis[0].clone())
        .scale(&BigInt::from(2))
        .add(&Morphism::basis(basis[2].clone()).scale(&BigInt::from(2)))
        .expect("same Hom-space");
    assert_eq!(square, expected);
    assert_eq!(
        dense_morphism(&square).to_rows(),
        big_rows(&[[2, 0, 0, 2], [0, 2, 2, 0], [0, 2, 2, 0], [2, 0, 0, 2]])
    );
    println!("PASS mirrored degree-2 basis, tuples, and square match the goldens");
}

/// Plain mode, endomorphisms of (2,2): the doubly-mixing basis element
/// squares to 4, 2, 4 times the basis in lexicographic order.
#[test]
fn plain_shuffle_square_matches_hand_count() {
    let lambda = plain("(2,2)");
    let basis = enumerate_orbit_matrices(&lambda, &lambda);
    assert_eq!(basis.len(), 3);
    let middle = Morphism::basis(basis[1].clone());
    let square = middle.compose(&middle).expect("endomorphisms compose");
    let expected = Morphism::basis(basis[0].clone())
        .scale(&BigInt::from(4))
        .add(&Morphism::basis(basis[1].clone()).scale(&BigInt::from(2)))
        .and_then(|m| m.add(&Morphism::basis(basis[2].clone()).scale(&BigInt::from(4))))
        .expect("same Hom-space");
    assert_eq!(square, expected);
    println!("PASS plain (2,2) shuffle square = 4/2/4 times the basis");
}

/// The layered word for the plain doubly-mixing diagram, stacked on
/// itself, normalizes to the frozen three-term expression.
#[test]
fn stacked_shuffle_diagram_normalizes_to_golden() {
    let word = "[s(1,1),s(1,1)] ; [id(1),x(1,1),id(1)] ; [m(1,1),m(1,1)]";
    let expr = parse_expr(word, SymmetryMode::Plain).expect("valid diagram");
    assert_eq!(expr.terms().len(), 1);
    let chain = expr.terms()[0].1.clone();
    let stacked = chain.then(&chain).expect("interfaces match");
    let result = normal_form(&stacked.evaluate());
    assert_eq!(
        result.to_string(),
        format!("4*[x(2,2)] + 2*{word} + 4*[id(2),id(2)]")
    );
    println!("PASS stacked shuffle diagram normalizes to 4/2/4 golden");
}

/// Splitting off a mirrored triple and re-absorbing it multiplies by
/// 160 on a thick axis strand and by 8 on a bare one.
#[test]
fn axis_split_merge_collapses_with_frozen_multiples() {
    let thick = parse_expr("[S(3,6)] ; [M(3,6)]", SymmetryMode::Hyper).expect("valid diagram");
    assert_eq!(
        normal_form(&thick.evaluate()).to_string(),
        "160*[ID(12)]"
    );
    let bare = parse_expr("[S(3,0)] ; [M(3,0)]", SymmetryMode::Hyper).expect("valid diagram");
    assert_eq!(normal_form(&bare.evaluate()).to_string(), "8*[ID(6)]");
    println!("PASS axis split-then-merge collapses to 160 and 8");
}

/// The batched composition engine agrees with the dense matrix engine:
/// exhaustively in half-degree 2 (both modes) and on 200 seeded random
/// basis pairs in half-degree 3.
#[test]
fn batched_and_dense_composition_agree() {
    let total = assert_suite_passes(Suite::Oracle, &SuiteConfig::default());
    println!("PASS composition engines agree on {total} checks");
}

/// Every relation family holds for all parameters within the default
/// strand budget of 8, in all distinct mirror variants.
#[test]
fn relation_suites_hold_within_strand_budget() {
    let config = SuiteConfig::default();
    let defining = assert_suite_passes(Suite::Defining, &config);
    let derived = assert_suite_passes(Suite::Derived, &config);
    let appendix = assert_suite_passes(Suite::Appendix, &config);
    println!(
        "PASS relation suites hold: {defining} defining, {derived} derived, {appendix} appendix cases"
    );
}

/// Every basis element's canonical layered diagram evaluates back to
/// exactly that basis element, across all Hom-spaces up to half-degree 3.
#[test]
fn canonical_diagrams_evaluate_to_their_basis_elements() {
    let total = assert_suite_passes(Suite::Functor, &SuiteConfig::default());
    println!("PASS canonical diagrams hit their basis elements in {total} Hom-spaces");
}

/// Orbit-stabilizer products recover the group order and orbit sizes
/// tile the tuple pairs, for both modes up to half-degree 3.
#[test]
fn orbit_counting_identities_hold() {
    let total = assert_suite_passes(Suite::Counting, &SuiteConfig::default());
    println!("PASS counting identities hold in {total} checks");
}
