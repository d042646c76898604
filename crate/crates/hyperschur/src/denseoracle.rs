//! Independent dense-matrix model of the category, used to cross-check the
//! combinatorial composition product.
//!
//! Each basis element of `Hom(mu, lambda)` acts on free modules spanned by
//! the tuple sets: its dense matrix has rows indexed by the tuples of
//! `lambda` and columns by the tuples of `mu` (both in ascending
//! lexicographic order), with a `1` wherever the row/column pair of tuples
//! realizes that basis element and `0` elsewhere. Composition of morphisms
//! then corresponds to plain matrix multiplication, giving a second, fully
//! independent route to every product.
//!
//! The reverse direction is linear-time: because distinct basis elements
//! index disjoint sets of matrix cells, a dense matrix in the span of a
//! Hom-space basis can be decomposed by reading one well-chosen cell per
//! basis element, followed by an exact verification of the reconstruction.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::hypercomb::{enumerate_tuples, Hypercomposition};
use crate::schurcat::{count_grid, enumerate_orbit_matrices, Morphism, OrbitMatrix};

/// Errors from the dense model.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// Matrix product with incompatible inner dimensions.
    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    /// A dense matrix whose shape does not match the tuple counts of the
    /// claimed Hom-space.
    #[error("shape mismatch: got {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    ShapeMismatch {
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    /// The matrix is not an integer combination of the Hom-space basis.
    #[error("matrix is not in the span of the Hom-space basis")]
    NotInSpan,
    /// Morphisms or matrices over different objects were mixed.
    #[error("object mismatch: expected {expected}, found {found}")]
    ObjectMismatch { expected: String, found: String },
}

/// A dense matrix with exact integer entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<BigInt>,
}

impl DenseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        DenseMatrix {
            nrows,
            ncols,
            entries: vec![BigInt::zero(); nrows * ncols],
        }
    }

    /// Builds a matrix from rows of primitive integers (test convenience).
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[&[T]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        DenseMatrix {
            nrows,
            ncols,
            entries: rows.iter().flat_map(|r| r.iter().map(|&v| v.into())).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.ncols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.nrows)
            .map(|r| self.entries[r * self.ncols..(r + 1) * self.ncols].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn multiply(&self, other: &DenseMatrix) -> Result<DenseMatrix, OracleError> {
        if self.ncols != other.nrows {
            return Err(OracleError::DimensionMismatch {
                left_rows: self.nrows,
                left_cols: self.ncols,
                right_rows: other.nrows,
                right_cols: other.ncols,
            });
        }
        let mut out = DenseMatrix::zeros(self.nrows, other.ncols);
        for r in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.ncols {
                    let b = other.entry(k, c);
                    if !b.is_zero() {
                        out.entries[r * out.ncols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix, OracleError> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(OracleError::DimensionMismatch {
                left_rows: self.nrows,
                left_cols: self.ncols,
                right_rows: other.nrows,
                right_cols: other.ncols,
            });
        }
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e += o;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> DenseMatrix {
        DenseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.nrows {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.ncols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
        }
        Ok(())
    }
}

/// The 0/1 dense matrix of a single basis element: rows over the target
/// tuples, columns over the source tuples, `1` exactly where the pair of
/// tuples has this count matrix.
pub fn dense_basis(a: &OrbitMatrix) -> DenseMatrix {
    let row_tuples = enumerate_tuples(a.target());
    let col_tuples = enumerate_tuples(a.source());
    let mut out = DenseMatrix::zeros(row_tuples.len(), col_tuples.len());
    for (r, i) in row_tuples.iter().enumerate() {
        for (c, j) in col_tuples.iter().enumerate() {
            if count_grid(i, j) == a.entries() {
                out.set(r, c, BigInt::from(1));
            }
        }
    }
    out
}

/// The dense matrix of a whole combination (zero morphisms give the zero
/// matrix of the right shape).
pub fn dense_morphism(f: &Morphism) -> DenseMatrix {
    let nrows = enumerate_tuples(f.target()).len();
    let ncols = enumerate_tuples(f.source()).len();
    let mut out = DenseMatrix::zeros(nrows, ncols);
    for (a, coeff) in f.terms() {
        out = out
            .add(&dense_basis(a).scale(coeff))
            .expect("all terms share one Hom-space shape");
    }
    out
}

/// Recovers the unique combination of `Hom(source, target)` basis elements
/// equal to `m`, or reports that none exists.
///
/// The coefficient of a basis element is read directly from the cell indexed
/// by its canonical pair — the base tuple is always row 0, and the paired
/// source tuple locates the column — because no other basis element touches
/// that cell. The candidate combination is then re-expanded and compared
/// against `m` entry by entry, so a success is a proof of exact equality.
pub fn decompose(
    m: &DenseMatrix,
    target: &Hypercomposition,
    source: &Hypercomposition,
) -> Result<Morphism, OracleError> {
    let row_tuples = enumerate_tuples(target);
    let col_tuples = enumerate_tuples(source);
    if m.nrows() != row_tuples.len() || m.ncols() != col_tuples.len() {
        return Err(OracleError::ShapeMismatch {
            got_rows: m.nrows(),
            got_cols: m.ncols(),
            want_rows: row_tuples.len(),
            want_cols: col_tuples.len(),
        });
    }
    let col_index: HashMap<&[usize], usize> = col_tuples
        .iter()
        .enumerate()
        .map(|(c, j)| (j.labels(), c))
        .collect();
    let mut terms = Vec::new();
    for a in enumerate_orbit_matrices(target, source) {
        let (_, j) = a.canonical_pair();
        let c = col_index[j.labels()];
        let coeff = m.entry(0, c).clone();
        if !coeff.is_zero() {
            terms.push((a, coeff));
        }
    }
    let candidate = Morphism::from_terms(target.clone(), source.clone(), terms)
        .expect("terms were enumerated for this Hom-space");
    if &dense_morphism(&candidate) != m {
        return Err(OracleError::NotInSpan);
    }
    Ok(candidate)
}

/// Composes two morphisms through the dense model: expand both, multiply,
/// and decompose the product back into basis terms.
pub fn compose_via_dense(f: &Morphism, g: &Morphism) -> Result<Morphism, OracleError> {
    if f.source() != g.target() {
        return Err(OracleError::ObjectMismatch {
            expected: f.source().to_string(),
            found: g.target().to_string(),
        });
    }
    let product = dense_morphism(f).multiply(&dense_morphism(g))?;
    decompose(&product, f.target(), g.source())
}
