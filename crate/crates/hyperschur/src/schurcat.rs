//! The Schur category: orbit matrices as a combinatorial basis, morphisms as
//! exact integer linear combinations, and their composition product.
//!
//! A Hom-space between objects `mu` (source) and `lambda` (target) has a
//! basis indexed by non-negative integer matrices with row sums `lambda`,
//! column sums `mu`, and — in hyper mode — symmetry under 180-degree
//! rotation. Such a matrix records, for one orbit of tuple pairs
//! `(i, j)` under the diagonal group action, how often each label pair
//! occurs: entry `(a, b)` counts positions `d` with `i_d = a` and `j_d = b`.
//!
//! Composition is computed in closed form over the basis. The structure
//! constant of basis elements `A` and `B` at `C` counts, for a fixed pair
//! `(i, k)` in the orbit of `C`, the middle tuples `j` that realize `A` on
//! `(i, j)` and `B` on `(j, k)`. All arithmetic is exact (`BigInt`).

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::hypercomb::{
    base_tuple, enumerate_tuples, Hypercomposition, LabelTuple, SymmetryMode,
};

/// Errors from the category layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchurError {
    /// A matrix fails the basis-membership conditions for its claimed spaces.
    #[error("invalid orbit matrix: {reason}")]
    InvalidMatrix { reason: String },
    /// Two morphisms (or a morphism pair in a composition) do not share the
    /// required interface object.
    #[error("object mismatch: expected {expected}, found {found}")]
    ObjectMismatch { expected: String, found: String },
    /// Operands live in different symmetry modes.
    #[error("mode mismatch: {left} vs {right}")]
    ModeMismatch {
        left: SymmetryMode,
        right: SymmetryMode,
    },
}

/// A basis element of a Hom-space: an integer matrix with prescribed margins
/// (row sums = target parts, column sums = source parts) and, in hyper mode,
/// invariance under 180-degree rotation.
///
/// Entries are stored flattened row-major; the derived ordering therefore
/// sorts basis elements of one Hom-space lexicographically by row-major
/// entries, which is also the enumeration order of [`enumerate_orbit_matrices`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitMatrix {
    entries: Vec<usize>,
    target: Hypercomposition,
    source: Hypercomposition,
}

impl OrbitMatrix {
    /// Validates `rows` as a basis element of `Hom(source, target)`.
    pub fn new(
        rows: Vec<Vec<usize>>,
        target: Hypercomposition,
        source: Hypercomposition,
    ) -> Result<Self, SchurError> {
        if target.mode() != source.mode() {
            return Err(SchurError::ModeMismatch {
                left: target.mode(),
                right: source.mode(),
            });
        }
        let (nrows, ncols) = (target.len(), source.len());
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return Err(SchurError::InvalidMatrix {
                reason: format!("shape must be {nrows}x{ncols}"),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            let sum: usize = row.iter().sum();
            if sum != target.parts()[r] {
                return Err(SchurError::InvalidMatrix {
                    reason: format!("row {r} sums to {sum}, expected {}", target.parts()[r]),
                });
            }
        }
        for c in 0..ncols {
            let sum: usize = rows.iter().map(|r| r[c]).sum();
            if sum != source.parts()[c] {
                return Err(SchurError::InvalidMatrix {
                    reason: format!("column {c} sums to {sum}, expected {}", source.parts()[c]),
                });
            }
        }
        if target.mode() == SymmetryMode::Hyper {
            for r in 0..nrows {
                for c in 0..ncols {
                    if rows[r][c] != rows[nrows - 1 - r][ncols - 1 - c] {
                        return Err(SchurError::InvalidMatrix {
                            reason: "entries must be invariant under 180-degree rotation"
                                .to_string(),
                        });
                    }
                }
            }
        }
        let entries = rows.into_iter().flatten().collect();
        Ok(OrbitMatrix {
            entries,
            target,
            source,
        })
    }

    /// The identity basis element of `Hom(lambda, lambda)`: the diagonal
    /// matrix of the parts.
    pub fn identity(lambda: &Hypercomposition) -> Self {
        let ell = lambda.len();
        let mut rows = vec![vec![0; ell]; ell];
        for (i, &p) in lambda.parts().iter().enumerate() {
            rows[i][i] = p;
        }
        OrbitMatrix::new(rows, lambda.clone(), lambda.clone())
            .expect("diagonal of the parts is a valid basis element")
    }

    /// The basis element realized by a pair of tuples over the same positions.
    pub fn from_pair(i: &LabelTuple, j: &LabelTuple) -> Result<Self, SchurError> {
        if i.len() != j.len() {
            return Err(SchurError::InvalidMatrix {
                reason: format!("tuple lengths differ: {} vs {}", i.len(), j.len()),
            });
        }
        let target = i.lambda().clone();
        let source = j.lambda().clone();
        if target.mode() != source.mode() {
            return Err(SchurError::ModeMismatch {
                left: target.mode(),
                right: source.mode(),
            });
        }
        let entries = count_grid(i, j);
        Ok(OrbitMatrix {
            entries,
            target,
            source,
        })
    }

    pub fn rows(&self) -> usize {
        self.target.len()
    }

    pub fn cols(&self) -> usize {
        self.source.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.entries[r * self.cols() + c]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn target(&self) -> &Hypercomposition {
        &self.target
    }

    pub fn source(&self) -> &Hypercomposition {
        &self.source
    }

    pub fn mode(&self) -> SymmetryMode {
        self.target.mode()
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows())
            .map(|r| (0..self.cols()).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// The distinguished pair of tuples in the orbit of this matrix, read off
    /// row-major: every cell `(a, b)` with value `v` contributes `v`
    /// consecutive positions labelled `a` on the target side and `b` on the
    /// source side. The target-side tuple is always the base tuple.
    pub fn canonical_pair(&self) -> (LabelTuple, LabelTuple) {
        let mut i_labels = Vec::new();
        let mut j_labels = Vec::new();
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                for _ in 0..self.entry(r, c) {
                    i_labels.push(r + 1);
                    j_labels.push(c + 1);
                }
            }
        }
        let i = LabelTuple::new(i_labels, self.target.clone())
            .expect("row-major emission matches the target margins");
        let j = LabelTuple::new(j_labels, self.source.clone())
            .expect("row-major emission matches the source margins");
        debug_assert_eq!(i, base_tuple(&self.target));
        (i, j)
    }
}

impl fmt::Display for OrbitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            (0..self.rows())
                .map(|r| format!(
                    "[{}]",
                    (0..self.cols()).map(|c| self.entry(r, c)).join(",")
                ))
                .join(",")
        )
    }
}

/// The flattened count matrix of a pair of equally long tuples: cell
/// `(a-1, b-1)` counts positions carrying label `a` in `i` and `b` in `j`.
pub fn count_grid(i: &LabelTuple, j: &LabelTuple) -> Vec<usize> {
    let cols = j.lambda().len();
    let mut grid = vec![0usize; i.lambda().len() * cols];
    for (a, b) in i.labels().iter().zip(j.labels()) {
        grid[(a - 1) * cols + (b - 1)] += 1;
    }
    grid
}

/// All basis elements of `Hom(source, target)`, in ascending row-major
/// lexicographic order of their entries. Empty when the margins are
/// incompatible (in particular whenever the part totals differ).
pub fn enumerate_orbit_matrices(
    target: &Hypercomposition,
    source: &Hypercomposition,
) -> Vec<OrbitMatrix> {
    assert_eq!(
        target.mode(),
        source.mode(),
        "objects must live in the same mode"
    );
    let nrows = target.len();
    let ncols = source.len();
    // Free cells: the whole matrix in plain mode; in hyper mode the rows
    // above the middle plus the left half (through the centre) of the middle
    // row, every other cell being the mirror of a free one.
    let hyper = target.mode() == SymmetryMode::Hyper;
    let free: Vec<(usize, usize)> = if hyper {
        let (mid_r, mid_c) = (nrows / 2, ncols / 2);
        (0..nrows)
            .cartesian_product(0..ncols)
            .filter(|&(r, c)| r < mid_r || (r == mid_r && c <= mid_c))
            .collect()
    } else {
        (0..nrows).cartesian_product(0..ncols).collect()
    };

    let mut row_cap: Vec<isize> = target.parts().iter().map(|&p| p as isize).collect();
    let mut col_cap: Vec<isize> = source.parts().iter().map(|&p| p as isize).collect();
    let mut cells = vec![0usize; nrows * ncols];
    let mut out = Vec::new();

    // Depth-first over the free cells in row-major order, values ascending,
    // assigning each mirror simultaneously; this emits matrices in ascending
    // row-major order because the first differing cell between two matrices
    // is always a free cell (a mirrored cell differs only if its earlier
    // source does).
    fn rec(
        k: usize,
        free: &[(usize, usize)],
        hyper: bool,
        nrows: usize,
        ncols: usize,
        row_cap: &mut Vec<isize>,
        col_cap: &mut Vec<isize>,
        cells: &mut Vec<usize>,
        out: &mut Vec<OrbitMatrix>,
        target: &Hypercomposition,
        source: &Hypercomposition,
    ) {
        if k == free.len() {
            if row_cap.iter().all(|&x| x == 0) && col_cap.iter().all(|&x| x == 0) {
                let rows: Vec<Vec<usize>> = (0..nrows)
                    .map(|r| cells[r * ncols..(r + 1) * ncols].to_vec())
                    .collect();
                out.push(
                    OrbitMatrix::new(rows, target.clone(), source.clone())
                        .expect("backtracking only completes valid margins"),
                );
            }
            return;
        }
        let (r, c) = free[k];
        let mirror = if hyper {
            let m = (nrows - 1 - r, ncols - 1 - c);
            if m == (r, c) {
                None
            } else {
                Some(m)
            }
        } else {
            None
        };
        // Capacity bound for this cell, counting double draws on shared
        // rows/columns with the mirror cell.
        let mut ub = row_cap[r].min(col_cap[c]);
        if let Some((mr, mc)) = mirror {
            if mr == r {
                ub = ub.min(row_cap[r] / 2);
            } else {
                ub = ub.min(row_cap[mr]);
            }
            if mc == c {
                ub = ub.min(col_cap[c] / 2);
            } else {
                ub = ub.min(col_cap[mc]);
            }
        }
        if ub < 0 {
            return;
        }
        // If this is the last free cell of its row, the value is forced by
        // the remaining row capacity.
        let last_in_row = free.get(k + 1).map(|&(nr, _)| nr != r).unwrap_or(true);
        let forced: Option<isize> = if last_in_row {
            let remaining = row_cap[r];
            match mirror {
                Some((mr, _)) if mr == r => {
                    if remaining % 2 != 0 {
                        // Cannot split an odd remainder across the cell and
                        // its in-row mirror.
                        return;
                    }
                    Some(remaining / 2)
                }
                None if mirror.is_none() && hyper && (r, c) == (nrows / 2, ncols / 2) => {
                    // Central cell: consumes the whole remainder by itself.
                    Some(remaining)
                }
                _ => Some(remaining),
            }
        } else {
            None
        };
        let range: Vec<isize> = match forced {
            Some(v) if v >= 0 && v <= ub => vec![v],
            Some(_) => vec![],
            None => (0..=ub).collect(),
        };
        for v in range {
            let vu = v as usize;
            cells[r * ncols + c] = vu;
            row_cap[r] -= v;
            col_cap[c] -= v;
            if let Some((mr, mc)) = mirror {
                cells[mr * ncols + mc] = vu;
                row_cap[mr] -= v;
                col_cap[mc] -= v;
            }
            rec(
                k + 1,
                free,
                hyper,
                nrows,
                ncols,
                row_cap,
                col_cap,
                cells,
                out,
                target,
                source,
            );
            row_cap[r] += v;
            col_cap[c] += v;
            if let Some((mr, mc)) = mirror {
                row_cap[mr] += v;
                col_cap[mc] += v;
            }
        }
        cells[r * ncols + c] = 0;
        if let Some((mr, mc)) = mirror {
            cells[mr * ncols + mc] = 0;
        }
    }

    rec(
        0, &free, hyper, nrows, ncols, &mut row_cap, &mut col_cap, &mut cells, &mut out, target,
        source,
    );
    debug_assert!(out.windows(2).all(|w| w[0].entries < w[1].entries));
    out
}

/// The structure constant of the composition product: how often the basis
/// element `c` occurs in `a` composed after `b`. Counted by brute force as
/// the number of middle tuples `j` such that the canonical pair `(i, k)` of
/// `c` satisfies `grid(i, j) = a` and `grid(j, k) = b`.
pub fn structure_constant(
    a: &OrbitMatrix,
    b: &OrbitMatrix,
    c: &OrbitMatrix,
) -> Result<BigUint, SchurError> {
    if a.source() != b.target() {
        return Err(SchurError::ObjectMismatch {
            expected: a.source().to_string(),
            found: b.target().to_string(),
        });
    }
    if c.target() != a.target() || c.source() != b.source() {
        return Err(SchurError::ObjectMismatch {
            expected: format!("Hom({}, {})", b.source(), a.target()),
            found: format!("Hom({}, {})", c.source(), c.target()),
        });
    }
    let (i, k) = c.canonical_pair();
    let mut count = BigUint::zero();
    for j in enumerate_tuples(a.source()) {
        if count_grid(&i, &j) == a.entries && count_grid(&j, &k) == b.entries {
            count += 1u32;
        }
    }
    Ok(count)
}

/// A morphism of the category: a finite integer combination of basis
/// elements of one Hom-space. The zero morphism has no terms but still
/// remembers its source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Hypercomposition,
    target: Hypercomposition,
    terms: BTreeMap<OrbitMatrix, BigInt>,
}

impl Morphism {
    pub fn zero(target: Hypercomposition, source: Hypercomposition) -> Self {
        Morphism {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    /// The morphism `1 * a`.
    pub fn basis(a: OrbitMatrix) -> Self {
        let mut terms = BTreeMap::new();
        let (target, source) = (a.target().clone(), a.source().clone());
        terms.insert(a, BigInt::from(1));
        Morphism {
            source,
            target,
            terms,
        }
    }

    pub fn identity(lambda: &Hypercomposition) -> Self {
        Morphism::basis(OrbitMatrix::identity(lambda))
    }

    /// Builds a combination, dropping zero coefficients and summing repeats.
    pub fn from_terms<I>(
        target: Hypercomposition,
        source: Hypercomposition,
        terms: I,
    ) -> Result<Self, SchurError>
    where
        I: IntoIterator<Item = (OrbitMatrix, BigInt)>,
    {
        let mut result = Morphism::zero(target, source);
        for (a, coeff) in terms {
            if a.target() != &result.target || a.source() != &result.source {
                return Err(SchurError::ObjectMismatch {
                    expected: format!("Hom({}, {})", result.source, result.target),
                    found: format!("Hom({}, {})", a.source(), a.target()),
                });
            }
            result.add_term(a, coeff);
        }
        Ok(result)
    }

    fn add_term(&mut self, a: OrbitMatrix, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(a).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            // `entry` borrowed the map; re-find the key to remove it.
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn source(&self) -> &Hypercomposition {
        &self.source
    }

    pub fn target(&self) -> &Hypercomposition {
        &self.target
    }

    pub fn mode(&self) -> SymmetryMode {
        self.target.mode()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order of basis element.
    pub fn terms(&self) -> impl Iterator<Item = (&OrbitMatrix, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: &OrbitMatrix) -> BigInt {
        self.terms.get(a).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism, SchurError> {
        if self.source != other.source || self.target != other.target {
            return Err(SchurError::ObjectMismatch {
                expected: format!("Hom({}, {})", self.source, self.target),
                found: format!("Hom({}, {})", other.source, other.target),
            });
        }
        let mut result = self.clone();
        for (a, coeff) in &other.terms {
            result.add_term(a.clone(), coeff.clone());
        }
        Ok(result)
    }

    pub fn scale(&self, k: &BigInt) -> Morphism {
        if k.is_zero() {
            return Morphism::zero(self.target.clone(), self.source.clone());
        }
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c * k))
                .collect(),
        }
    }

    pub fn neg(&self) -> Morphism {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism, SchurError> {
        self.add(&other.neg())
    }

    /// Composition `self` after `other` (`other` is applied first), computed
    /// batched over the whole combination rather than per basis pair.
    ///
    /// For a result basis element `C` with canonical pair `(i, k)` — where
    /// `i` is always the base tuple of the target — the coefficient is
    ///
    /// ```text
    /// sum over middle tuples j of  coeff_self(grid(i, j)) * coeff_other(grid(j, k))
    /// ```
    ///
    /// Because `i` is the same for every `C`, the inner sum reduces to a set
    /// of `(j, coeff)` hits computed once, then re-scored against each `k`.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism, SchurError> {
        if self.mode() != other.mode() {
            return Err(SchurError::ModeMismatch {
                left: self.mode(),
                right: other.mode(),
            });
        }
        if self.source != other.target {
            return Err(SchurError::ObjectMismatch {
                expected: self.source.to_string(),
                found: other.target.to_string(),
            });
        }
        let mut result = Morphism::zero(self.target.clone(), other.source.clone());
        if self.is_zero() || other.is_zero() {
            return Ok(result);
        }
        let f_map: HashMap<&[usize], &BigInt> = self
            .terms
            .iter()
            .map(|(a, c)| (a.entries(), c))
            .collect();
        let g_map: HashMap<&[usize], &BigInt> = other
            .terms
            .iter()
            .map(|(b, c)| (b.entries(), c))
            .collect();
        let base = base_tuple(&self.target);
        let hits: Vec<(LabelTuple, &BigInt)> = enumerate_tuples(&self.source)
            .into_iter()
            .filter_map(|j| {
                let grid = count_grid(&base, &j);
                f_map.get(grid.as_slice()).map(|&c| (j, c))
            })
            .collect();
        for c_mat in enumerate_orbit_matrices(&self.target, &other.source) {
            let (_, k) = c_mat.canonical_pair();
            let mut coeff = BigInt::zero();
            for (j, ca) in &hits {
                let grid = count_grid(j, &k);
                if let Some(&cb) = g_map.get(grid.as_slice()) {
                    coeff += *ca * cb;
                }
            }
            if !coeff.is_zero() {
                result.terms.insert(c_mat, coeff);
            }
        }
        Ok(result)
    }
}

impl fmt::Display for Morphism {
    /// Renders `2*[[1,0],[0,1]] + -1*[[0,1],[1,0]]`; the zero morphism is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        write!(
            f,
            "{}",
            self.terms
                .iter()
                .map(|(a, c)| format!("{c}*{a}"))
                .join(" + ")
        )
    }
}
