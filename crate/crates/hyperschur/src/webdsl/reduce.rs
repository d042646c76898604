//! Canonical diagrams for basis elements.
//!
//! [`reduced_cfd`] turns an orbit matrix into a deterministic chain in three
//! stages, read bottom-to-top:
//!
//! 1. **splits** — every source part is cut into the nonzero cells of its
//!    column, peeling the highest-row piece off to the right first; the axis
//!    part peels its outermost mirror pair first, keeping the central cell
//!    on the axis;
//! 2. **crossings** — the strands are sorted by their destination row,
//!    repeatedly crossing the leftmost adjacent out-of-order pair, and
//!    sending the rightmost strand across the axis whenever its destination
//!    lies in the mirrored half;
//! 3. **merges** — each target row merges its leftmost two pieces per layer,
//!    and the axis row absorbs its innermost remaining piece per layer.
//!
//! A diagonal matrix produces the single identity layer. Evaluating the
//! resulting chain always returns exactly the basis element it came from
//! (with coefficient one), which the test suites verify exhaustively in low
//! degree.
//!
//! [`normal_form`] rewrites a morphism as the combination of the canonical
//! diagrams of its terms, in basis order.

use crate::hypercomb::SymmetryMode;
use crate::schurcat::{Morphism, OrbitMatrix};

use super::{Chain, DiagramExpr, Layer, LayerBuilder};

/// The canonical chain of a basis element.
pub fn reduced_cfd(a: &OrbitMatrix) -> Chain {
    let mode = a.mode();
    let hyper = mode == SymmetryMode::Hyper;
    let nrows = a.rows();
    let ncols = a.cols();
    let (mid_row, mid_col) = if hyper {
        (nrows / 2, ncols / 2)
    } else {
        (nrows, ncols)
    };
    let left_cols = if hyper { mid_col } else { ncols };

    let mut layers: Vec<Layer> = Vec::new();

    // Pieces of the off-axis columns: (destination row, thickness),
    // row-ascending.
    let cols: Vec<Vec<(usize, usize)>> = (0..left_cols)
        .map(|c| {
            (0..nrows)
                .filter(|&r| a.entry(r, c) > 0)
                .map(|r| (r, a.entry(r, c)))
                .collect()
        })
        .collect();
    // Mirror pairs of the axis column (upper half only) and the central cell.
    let axis_pairs: Vec<(usize, usize)> = if hyper {
        (0..mid_row)
            .filter(|&r| a.entry(r, mid_col) > 0)
            .map(|r| (r, a.entry(r, mid_col)))
            .collect()
    } else {
        Vec::new()
    };
    let mut mid = if hyper { a.entry(mid_row, mid_col) } else { 0 };

    // ---- Stage 1: splits, all columns advancing one split per layer ----
    let split_layers = cols
        .iter()
        .map(|c| c.len() - 1)
        .chain(std::iter::once(axis_pairs.len()))
        .max()
        .unwrap_or(0);
    for lj in 1..=split_layers {
        let mut b = LayerBuilder::new(mode);
        for col in &cols {
            let k = col.len();
            if lj <= k - 1 {
                // Peel the piece k-lj off the unsplit remainder.
                let rem: usize = col[..k - lj].iter().map(|&(_, v)| v).sum();
                b.push_split(rem, col[k - lj].1);
                for &(_, v) in &col[k - lj + 1..] {
                    b.push_id(v);
                }
            } else {
                for &(_, v) in col {
                    b.push_id(v);
                }
            }
        }
        if hyper {
            let t = axis_pairs.len();
            if lj <= t {
                for &(_, v) in &axis_pairs[..lj - 1] {
                    b.push_id(v);
                }
                let inner: usize = axis_pairs[lj..].iter().map(|&(_, v)| 2 * v).sum();
                b.axis_split(axis_pairs[lj - 1].1, mid + inner);
            } else {
                for &(_, v) in &axis_pairs {
                    b.push_id(v);
                }
                b.axis_id(mid);
            }
        }
        layers.push(b.build().expect("split layers assemble over valid objects"));
    }

    // ---- Stage 2: crossings ----
    let mut strands: Vec<(usize, usize)> = cols
        .iter()
        .flatten()
        .chain(axis_pairs.iter())
        .copied()
        .collect();
    loop {
        let inversion = (0..strands.len().saturating_sub(1))
            .find(|&p| strands[p].0 > strands[p + 1].0);
        if let Some(p) = inversion {
            let mut b = LayerBuilder::new(mode);
            for s in &strands[..p] {
                b.push_id(s.1);
            }
            b.push_cross(strands[p].1, strands[p + 1].1);
            for s in &strands[p + 2..] {
                b.push_id(s.1);
            }
            if hyper {
                b.axis_id(mid);
            }
            layers.push(b.build().expect("crossing layers assemble over valid objects"));
            strands.swap(p, p + 1);
        } else if hyper && strands.last().map(|s| s.0 > mid_row).unwrap_or(false) {
            let last = strands.len() - 1;
            let mut b = LayerBuilder::new(mode);
            for s in &strands[..last] {
                b.push_id(s.1);
            }
            b.axis_cross(strands[last].1, mid);
            layers.push(b.build().expect("crossing layers assemble over valid objects"));
            strands[last].0 = nrows - 1 - strands[last].0;
        } else {
            break;
        }
    }

    // ---- Stage 3: merges, every row advancing one merge per layer ----
    loop {
        let mut b = LayerBuilder::new(mode);
        let mut next: Vec<(usize, usize)> = Vec::new();
        let mut changed = false;
        let mut idx = 0;
        while idx < strands.len() {
            let dest = strands[idx].0;
            if hyper && dest == mid_row {
                break;
            }
            let mut end = idx;
            while end < strands.len() && strands[end].0 == dest {
                end += 1;
            }
            if end - idx >= 2 {
                b.push_merge(strands[idx].1, strands[idx + 1].1);
                next.push((dest, strands[idx].1 + strands[idx + 1].1));
                for &s in &strands[idx + 2..end] {
                    b.push_id(s.1);
                    next.push(s);
                }
                changed = true;
            } else {
                b.push_id(strands[idx].1);
                next.push(strands[idx]);
            }
            idx = end;
        }
        if hyper {
            let axis_group = &strands[idx..];
            if let Some((_, innermost)) = axis_group.last().copied() {
                for &s in &axis_group[..axis_group.len() - 1] {
                    b.push_id(s.1);
                    next.push(s);
                }
                b.axis_merge(innermost, mid);
                mid += 2 * innermost;
                changed = true;
            } else {
                b.axis_id(mid);
            }
        }
        if !changed {
            break;
        }
        layers.push(b.build().expect("merge layers assemble over valid objects"));
        strands = next;
    }

    if layers.is_empty() {
        layers.push(Layer::identity(a.target()));
    }
    let chain = Chain::new(layers).expect("stage outputs line up by construction");
    debug_assert_eq!(chain.source(), a.source());
    debug_assert_eq!(chain.target(), a.target());
    chain
}

/// The canonical expression of a morphism: one term per basis element, in
/// basis order, with the exact coefficients. The zero morphism yields the
/// empty expression, printed as `0`.
pub fn normal_form(f: &Morphism) -> DiagramExpr {
    let terms = f
        .terms()
        .map(|(a, coeff)| (coeff.clone(), reduced_cfd(a)))
        .collect();
    DiagramExpr::new(f.source().clone(), f.target().clone(), terms)
        .expect("canonical diagrams live in the morphism's Hom-space")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomb::{enumerate_hypercompositions, Hypercomposition};
    use crate::schurcat::enumerate_orbit_matrices;
    use crate::webdsl::parse_expr;

    fn hyper(parts: &[usize]) -> Hypercomposition {
        Hypercomposition::new(parts.to_vec(), SymmetryMode::Hyper).unwrap()
    }

    fn plain(parts: &[usize]) -> Hypercomposition {
        Hypercomposition::new(parts.to_vec(), SymmetryMode::Plain).unwrap()
    }

    fn mat(rows: &[&[usize]], target: &Hypercomposition, source: &Hypercomposition) -> OrbitMatrix {
        OrbitMatrix::new(
            rows.iter().map(|r| r.to_vec()).collect(),
            target.clone(),
            source.clone(),
        )
        .unwrap()
    }

    #[test]
    fn worked_three_stage_example() {
        let target = hyper(&[3, 4, 3]);
        let source = hyper(&[2, 6, 2]);
        let a = mat(
            &[&[1, 2, 0], &[1, 2, 1], &[0, 2, 1]],
            &target,
            &source,
        );
        let chain = reduced_cfd(&a);
        assert_eq!(
            chain.to_string(),
            "[s(1,1)|S(2,2)] ; [id(1),x(1,2)|ID(2)] ; [m(1,2)|M(1,2)]"
        );
        assert_eq!(chain.evaluate(), Morphism::basis(a));
    }

    #[test]
    fn axis_crossing_example() {
        let lam = hyper(&[1, 2, 1]);
        let anti = mat(&[&[0, 0, 1], &[0, 2, 0], &[1, 0, 0]], &lam, &lam);
        assert_eq!(reduced_cfd(&anti).to_string(), "[X(1,2)]");
    }

    #[test]
    fn diagonal_matrices_become_identity_layers() {
        assert_eq!(
            reduced_cfd(&OrbitMatrix::identity(&hyper(&[1, 2, 1]))).to_string(),
            "[id(1)|ID(2)]"
        );
        assert_eq!(
            reduced_cfd(&OrbitMatrix::identity(&hyper(&[4]))).to_string(),
            "[ID(4)]"
        );
        assert_eq!(
            reduced_cfd(&OrbitMatrix::identity(&hyper(&[2, 0, 2]))).to_string(),
            "[id(2)]"
        );
        assert_eq!(
            reduced_cfd(&OrbitMatrix::identity(&plain(&[2, 2]))).to_string(),
            "[id(2),id(2)]"
        );
    }

    #[test]
    fn plain_all_ones_diagram() {
        let lam = plain(&[2, 2]);
        let all_ones = mat(&[&[1, 1], &[1, 1]], &lam, &lam);
        assert_eq!(
            reduced_cfd(&all_ones).to_string(),
            "[s(1,1),s(1,1)] ; [id(1),x(1,1),id(1)] ; [m(1,1),m(1,1)]"
        );
        let anti = mat(&[&[0, 2], &[2, 0]], &lam, &lam);
        assert_eq!(reduced_cfd(&anti).to_string(), "[x(2,2)]");
    }

    #[test]
    fn normal_form_of_squared_middle_elements() {
        // Hyper degree 2.
        let lam = hyper(&[1, 2, 1]);
        let middle = mat(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]], &lam, &lam);
        let f = Morphism::basis(middle);
        let square = f.compose(&f).unwrap();
        assert_eq!(
            normal_form(&square).to_string(),
            "2*[X(1,2)] + 2*[id(1)|ID(2)]"
        );
        // Plain degree 4.
        let lam = plain(&[2, 2]);
        let all_ones = mat(&[&[1, 1], &[1, 1]], &lam, &lam);
        let f = Morphism::basis(all_ones);
        let square = f.compose(&f).unwrap();
        assert_eq!(
            normal_form(&square).to_string(),
            "4*[x(2,2)] + \
             2*[s(1,1),s(1,1)] ; [id(1),x(1,1),id(1)] ; [m(1,1),m(1,1)] + \
             4*[id(2),id(2)]"
        );
    }

    #[test]
    fn normal_form_round_trips_through_the_parser() {
        let lam = hyper(&[1, 2, 1]);
        let middle = mat(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]], &lam, &lam);
        let f = Morphism::basis(middle);
        let square = f.compose(&f).unwrap();
        let text = normal_form(&square).to_string();
        let reparsed = parse_expr(&text, SymmetryMode::Hyper).unwrap();
        assert_eq!(reparsed.evaluate(), square);
    }

    #[test]
    fn axis_split_merge_normalizes_to_a_multiple_of_the_identity() {
        let expr = parse_expr("[S(3,6)] ; [M(3,6)]", SymmetryMode::Hyper).unwrap();
        assert_eq!(normal_form(&expr.evaluate()).to_string(), "160*[ID(12)]");
        let expr = parse_expr("[S(3,0)] ; [M(3,0)]", SymmetryMode::Hyper).unwrap();
        assert_eq!(normal_form(&expr.evaluate()).to_string(), "8*[ID(6)]");
    }

    #[test]
    fn canonical_diagrams_evaluate_to_their_basis_element_degree_two() {
        for mode in [SymmetryMode::Hyper, SymmetryMode::Plain] {
            let objects = enumerate_hypercompositions(2, mode);
            for lam in &objects {
                for mu in &objects {
                    for a in enumerate_orbit_matrices(lam, mu) {
                        let chain = reduced_cfd(&a);
                        assert_eq!(chain.source(), mu);
                        assert_eq!(chain.target(), lam);
                        assert_eq!(
                            chain.evaluate(),
                            Morphism::basis(a.clone()),
                            "diagram {chain} for {a}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn zero_morphism_normal_form() {
        let lam = hyper(&[1, 2, 1]);
        let zero = Morphism::zero(lam.clone(), lam.clone());
        assert_eq!(normal_form(&zero).to_string(), "0");
    }
}
