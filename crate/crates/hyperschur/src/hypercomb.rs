//! Combinatorial substrate: hypercompositions, label tuples, and the group
//! acting on them.
//!
//! In hyper mode the objects are *hypercompositions*: odd-length palindromic
//! tuples of non-negative thicknesses summing to `2n`, where every part is
//! positive except possibly the middle one, and the middle part is even. The
//! acting group is the hyperoctahedral group `H_n`, realized as the subgroup
//! of `S_{2n}` of permutations `w` with `w(2n+1-i) = 2n+1-w(i)`.
//!
//! Plain mode switches every symmetry predicate off: objects are ordinary
//! compositions of `n` (all parts positive) and the group is `S_n`. All
//! downstream machinery runs through the same code paths in both modes.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// Default cap on exhaustive group enumeration (`2^n * n!` elements in hyper
/// mode). Callers that need orbit sizes beyond this must use the counting
/// formulas instead of listing elements.
pub const DEFAULT_GROUP_CAP: u64 = 1_000_000;

/// Errors from the combinatorial layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypercombError {
    /// The given parts do not satisfy the object invariants for the mode.
    #[error("invalid {mode} object {parts:?}: {reason}")]
    InvalidObject {
        parts: Vec<usize>,
        mode: SymmetryMode,
        reason: String,
    },
    /// A 1-based strand position outside `1..=len`.
    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    /// Two sequences that must have equal length do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    /// The image sequence is not a permutation of `1..=len`.
    #[error("images {images:?} are not a permutation of 1..={len}")]
    NotAPermutation { images: Vec<usize>, len: usize },
    /// Hyper mode requires `w(m+1-i) = m+1-w(i)`.
    #[error("permutation lacks the vertical symmetry w(m+1-i) = m+1-w(i)")]
    NotVerticallySymmetric,
    /// Exhaustive group enumeration would exceed the configured cap.
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: BigUint, cap: u64 },
    /// Unparseable textual object.
    #[error("cannot parse object from {text:?}")]
    ParseObject { text: String },
}

/// Which symmetry regime the whole engine runs under.
///
/// `Hyper` is the main case (vertically symmetric diagrams, group `H_n`);
/// `Plain` is the classical baseline (no symmetry, group `S_n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymmetryMode {
    Hyper,
    Plain,
}

impl fmt::Display for SymmetryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryMode::Hyper => write!(f, "hyper"),
            SymmetryMode::Plain => write!(f, "plain"),
        }
    }
}

/// An object of the category: a hypercomposition (hyper mode) or a strict
/// composition (plain mode), together with its degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypercomposition {
    parts: Vec<usize>,
    n: usize,
    mode: SymmetryMode,
}

impl Hypercomposition {
    /// Validates `parts` for `mode` and wraps them as an object.
    pub fn new(parts: Vec<usize>, mode: SymmetryMode) -> Result<Self, HypercombError> {
        let fail = |reason: &str| HypercombError::InvalidObject {
            parts: parts.clone(),
            mode,
            reason: reason.to_string(),
        };
        if parts.is_empty() {
            return Err(fail("no parts"));
        }
        let total: usize = parts.iter().sum();
        match mode {
            SymmetryMode::Hyper => {
                if parts.len() % 2 == 0 {
                    return Err(fail("length must be odd"));
                }
                let mid = parts.len() / 2;
                if parts[mid] % 2 != 0 {
                    return Err(fail("middle part must be even"));
                }
                for (i, &p) in parts.iter().enumerate() {
                    if i != mid && p == 0 {
                        return Err(fail("only the middle part may be 0"));
                    }
                    if parts[parts.len() - 1 - i] != p {
                        return Err(fail("parts must be palindromic"));
                    }
                }
                if total == 0 {
                    return Err(fail("total must be positive"));
                }
                debug_assert_eq!(total % 2, 0, "palindrome with even middle has even total");
                Ok(Hypercomposition {
                    n: total / 2,
                    parts,
                    mode,
                })
            }
            SymmetryMode::Plain => {
                if parts.iter().any(|&p| p == 0) {
                    return Err(fail("all parts must be positive"));
                }
                Ok(Hypercomposition {
                    n: total,
                    parts,
                    mode,
                })
            }
        }
    }

    /// Parses the textual form `(1,2,1)`.
    pub fn parse(text: &str, mode: SymmetryMode) -> Result<Self, HypercombError> {
        let err = || HypercombError::ParseObject {
            text: text.to_string(),
        };
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(err)?;
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        Hypercomposition::new(parts, mode)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts (including a zero middle part).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid object always has at least one part
    }

    /// The degree `n`; the parts sum to `2n` in hyper mode and `n` in plain mode.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sum of all parts (`2n` or `n` depending on mode).
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn mode(&self) -> SymmetryMode {
        self.mode
    }

    /// Index of the middle part (hyper mode only).
    pub fn middle_index(&self) -> Option<usize> {
        match self.mode {
            SymmetryMode::Hyper => Some(self.parts.len() / 2),
            SymmetryMode::Plain => None,
        }
    }

    /// Length of the underlying position range: `2n` in hyper mode, `n` in plain.
    pub fn positions(&self) -> usize {
        self.total()
    }
}

impl fmt::Display for Hypercomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// All compositions of `s` into positive parts, in no particular order.
/// `s = 0` yields the single empty composition.
fn compositions(s: usize) -> Vec<Vec<usize>> {
    if s == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    // First part runs over 1..=s, the rest recurses.
    for first in 1..=s {
        for mut rest in compositions(s - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every object of degree `n`, each exactly once, ordered by length and then
/// lexicographically on parts.
pub fn enumerate_hypercompositions(n: usize, mode: SymmetryMode) -> Vec<Hypercomposition> {
    assert!(n >= 1, "degree must be positive");
    let mut out = Vec::new();
    match mode {
        SymmetryMode::Hyper => {
            // Choose the left half (a composition of s) and give the middle
            // part the remaining 2(n-s); s = 0 is the single-part object (2n).
            for s in 0..=n {
                for left in compositions(s) {
                    if s == 0 {
                        out.push(
                            Hypercomposition::new(vec![2 * n], mode)
                                .expect("constructed object is valid"),
                        );
                        continue;
                    }
                    let mut parts = left.clone();
                    parts.push(2 * (n - s));
                    parts.extend(left.iter().rev());
                    out.push(
                        Hypercomposition::new(parts, mode).expect("constructed object is valid"),
                    );
                }
            }
        }
        SymmetryMode::Plain => {
            for parts in compositions(n) {
                out.push(Hypercomposition::new(parts, mode).expect("constructed object is valid"));
            }
        }
    }
    out.sort_by(|a, b| (a.len(), a.parts()).cmp(&(b.len(), b.parts())));
    out
}

/// A group element, stored as the one-line image sequence `w(1), ..., w(m)`
/// with 1-based values. In hyper mode `m = 2n` and the vertical symmetry
/// `w(m+1-i) = m+1-w(i)` holds; in plain mode `m = n` with no constraint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    images: Vec<usize>,
}

impl GroupElement {
    /// Builds an element from its one-line images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, HypercombError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v == 0 || v > m || seen[v - 1] {
                return Err(HypercombError::NotAPermutation { images, len: m });
            }
            seen[v - 1] = true;
        }
        Ok(GroupElement { images })
    }

    /// As `from_images`, additionally requiring the vertical symmetry.
    pub fn from_images_symmetric(images: Vec<usize>) -> Result<Self, HypercombError> {
        let g = GroupElement::from_images(images)?;
        if !g.is_vertically_symmetric() {
            return Err(HypercombError::NotVerticallySymmetric);
        }
        Ok(g)
    }

    pub fn identity(m: usize) -> Self {
        GroupElement {
            images: (1..=m).collect(),
        }
    }

    /// Number of points being permuted.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for a 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Whether `w(m+1-i) = m+1-w(i)` for all `i`.
    pub fn is_vertically_symmetric(&self) -> bool {
        let m = self.images.len();
        (1..=m).all(|i| self.image(m + 1 - i) == m + 1 - self.image(i))
    }

    pub fn inverse(&self) -> GroupElement {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        GroupElement { images }
    }

    /// Group product `self * other`, with `other` applied first:
    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement, HypercombError> {
        if self.degree() != other.degree() {
            return Err(HypercombError::LengthMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = (1..=self.degree())
            .map(|i| self.image(other.image(i)))
            .collect();
        Ok(GroupElement { images })
    }
}

/// Order of the acting group: `2^n * n!` in hyper mode, `n!` in plain mode.
pub fn group_order(n: usize, mode: SymmetryMode) -> BigUint {
    let mut order = BigUint::one();
    for k in 1..=n {
        order *= BigUint::from(k);
    }
    if mode == SymmetryMode::Hyper {
        order <<= n;
    }
    order
}

/// Iterates the whole group with the default enumeration cap.
pub fn group_elements(
    n: usize,
    mode: SymmetryMode,
) -> Result<Box<dyn Iterator<Item = GroupElement>>, HypercombError> {
    group_elements_with_cap(n, mode, DEFAULT_GROUP_CAP)
}

/// Iterates every group element exactly once, or errors if the group order
/// exceeds `cap`. Hyper-mode elements are built from a permutation of
/// `{1..n}` plus a sign mask: a flipped point `i <= n` maps to `2n+1-v`
/// instead of `v`, and positions above `n` follow by symmetry.
pub fn group_elements_with_cap(
    n: usize,
    mode: SymmetryMode,
    cap: u64,
) -> Result<Box<dyn Iterator<Item = GroupElement>>, HypercombError> {
    assert!(n >= 1, "degree must be positive");
    let order = group_order(n, mode);
    if order > BigUint::from(cap) {
        return Err(HypercombError::CapExceeded { order, cap });
    }
    match mode {
        SymmetryMode::Plain => {
            let iter = (1..=n)
                .permutations(n)
                .map(|images| GroupElement { images });
            Ok(Box::new(iter))
        }
        SymmetryMode::Hyper => {
            let iter = (1..=n).permutations(n).flat_map(move |p| {
                (0u64..(1 << n)).map(move |mask| {
                    let mut images = vec![0; 2 * n];
                    for i in 0..n {
                        let v = p[i];
                        let w = if mask & (1 << i) != 0 { 2 * n + 1 - v } else { v };
                        images[i] = w;
                        images[2 * n - 1 - i] = 2 * n + 1 - w;
                    }
                    GroupElement { images }
                })
            });
            Ok(Box::new(iter))
        }
    }
}

/// Order of the stabilizer of the base tuple of `lambda`: the product of the
/// part factorials, where the middle part `2c` contributes `2^c * c!` instead
/// of `(2c)!` (its strands may only be permuted symmetrically).
pub fn stabilizer_order(lambda: &Hypercomposition) -> BigUint {
    let factorial = |k: usize| -> BigUint {
        let mut f = BigUint::one();
        for j in 1..=k {
            f *= BigUint::from(j);
        }
        f
    };
    let mut order = BigUint::one();
    match lambda.middle_index() {
        Some(mid) => {
            for (i, &p) in lambda.parts().iter().enumerate() {
                if i < mid {
                    order *= factorial(p);
                }
            }
            let c = lambda.parts()[mid] / 2;
            order *= factorial(c);
            order <<= c;
        }
        None => {
            for &p in lambda.parts() {
                order *= factorial(p);
            }
        }
    }
    order
}

/// The block label of a 1-based strand `position`: positions fall into
/// consecutive blocks of sizes `lambda_1, lambda_2, ...`; empty blocks are
/// skipped, so their labels never occur.
pub fn labelling_function(
    lambda: &Hypercomposition,
    position: usize,
) -> Result<usize, HypercombError> {
    let len = lambda.positions();
    if position == 0 || position > len {
        return Err(HypercombError::PositionOutOfRange { position, len });
    }
    let mut upper = 0;
    for (j, &p) in lambda.parts().iter().enumerate() {
        upper += p;
        if position <= upper {
            return Ok(j + 1);
        }
    }
    unreachable!("position is within the total by the range check")
}

/// An element of the tuple set of `lambda`: block labels listed per position,
/// with label `j` occurring exactly `lambda_j` times. In hyper mode the
/// anti-symmetry `i_d + i_{m+1-d} = len(lambda) + 1` also holds.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelTuple {
    labels: Vec<usize>,
    lambda: Hypercomposition,
}

impl LabelTuple {
    /// Validates `labels` against `lambda` (multiplicities, and anti-symmetry
    /// in hyper mode).
    pub fn new(labels: Vec<usize>, lambda: Hypercomposition) -> Result<Self, HypercombError> {
        let t = LabelTuple { labels, lambda };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<(), HypercombError> {
        let m = self.lambda.positions();
        if self.labels.len() != m {
            return Err(HypercombError::LengthMismatch {
                left: self.labels.len(),
                right: m,
            });
        }
        let ell = self.lambda.len();
        let mut counts = vec![0usize; ell];
        for &l in &self.labels {
            if l == 0 || l > ell {
                return Err(HypercombError::InvalidObject {
                    parts: self.labels.clone(),
                    mode: self.lambda.mode(),
                    reason: format!("label {l} out of range 1..={ell}"),
                });
            }
            counts[l - 1] += 1;
        }
        if counts != self.lambda.parts() {
            return Err(HypercombError::InvalidObject {
                parts: self.labels.clone(),
                mode: self.lambda.mode(),
                reason: "label multiplicities do not match the parts".to_string(),
            });
        }
        if self.lambda.mode() == SymmetryMode::Hyper {
            for d in 0..m {
                if self.labels[d] + self.labels[m - 1 - d] != ell + 1 {
                    return Err(HypercombError::InvalidObject {
                        parts: self.labels.clone(),
                        mode: self.lambda.mode(),
                        reason: "labels violate the anti-symmetry constraint".to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn lambda(&self) -> &Hypercomposition {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl fmt::Display for LabelTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.labels.iter().join(","))
    }
}

/// The lexicographically least tuple `(L(1), ..., L(m))` given by the
/// labelling function; always the first element of `enumerate_tuples`.
pub fn base_tuple(lambda: &Hypercomposition) -> LabelTuple {
    let labels = (1..=lambda.positions())
        .map(|pos| labelling_function(lambda, pos).expect("position in range"))
        .collect();
    LabelTuple {
        labels,
        lambda: lambda.clone(),
    }
}

/// All tuples of `lambda` in ascending lexicographic order.
///
/// Hyper mode only chooses the first `n` positions: position `m+1-d` is
/// forced to the complementary label, so choosing the first half smallest
/// label first yields full lexicographic order.
pub fn enumerate_tuples(lambda: &Hypercomposition) -> Vec<LabelTuple> {
    let m = lambda.positions();
    let ell = lambda.len();
    let mut remaining: Vec<usize> = lambda.parts().to_vec();
    let mut current = vec![0usize; m];
    let mut out = Vec::new();
    let free = match lambda.mode() {
        SymmetryMode::Hyper => m / 2,
        SymmetryMode::Plain => m,
    };

    fn rec(
        d: usize,
        free: usize,
        m: usize,
        ell: usize,
        lambda: &Hypercomposition,
        remaining: &mut Vec<usize>,
        current: &mut Vec<usize>,
        out: &mut Vec<LabelTuple>,
    ) {
        if d == free {
            out.push(LabelTuple {
                labels: current.clone(),
                lambda: lambda.clone(),
            });
            return;
        }
        for label in 1..=ell {
            let partner = ell + 1 - label;
            match lambda.mode() {
                SymmetryMode::Hyper => {
                    // Placing `label` at position d also places `partner` at
                    // the mirrored position; a self-paired label needs two
                    // copies available.
                    let ok = if label == partner {
                        remaining[label - 1] >= 2
                    } else {
                        remaining[label - 1] >= 1 && remaining[partner - 1] >= 1
                    };
                    if !ok {
                        continue;
                    }
                    remaining[label - 1] -= 1;
                    remaining[partner - 1] -= 1;
                    current[d] = label;
                    current[m - 1 - d] = partner;
                    rec(d + 1, free, m, ell, lambda, remaining, current, out);
                    remaining[label - 1] += 1;
                    remaining[partner - 1] += 1;
                }
                SymmetryMode::Plain => {
                    if remaining[label - 1] == 0 {
                        continue;
                    }
                    remaining[label - 1] -= 1;
                    current[d] = label;
                    rec(d + 1, free, m, ell, lambda, remaining, current, out);
                    remaining[label - 1] += 1;
                }
            }
        }
    }

    rec(
        0,
        free,
        m,
        ell,
        lambda,
        &mut remaining,
        &mut current,
        &mut out,
    );
    debug_assert!(out.windows(2).all(|w| w[0].labels < w[1].labels));
    out
}

/// Applies a group element to a tuple: the result at position `r` is the
/// input at position `w^{-1}(r)`, i.e. `out[w(d)] = t[d]`.
pub fn act(g: &GroupElement, t: &LabelTuple) -> Result<LabelTuple, HypercombError> {
    if g.degree() != t.len() {
        return Err(HypercombError::LengthMismatch {
            left: g.degree(),
            right: t.len(),
        });
    }
    let mut labels = vec![0usize; t.len()];
    for (d, &l) in t.labels().iter().enumerate() {
        labels[g.image(d + 1) - 1] = l;
    }
    let result = LabelTuple {
        labels,
        lambda: t.lambda().clone(),
    };
    debug_assert!(result.check().is_ok(), "group action preserves the tuple set");
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyper(parts: &[usize]) -> Hypercomposition {
        Hypercomposition::new(parts.to_vec(), SymmetryMode::Hyper).unwrap()
    }

    fn plain(parts: &[usize]) -> Hypercomposition {
        Hypercomposition::new(parts.to_vec(), SymmetryMode::Plain).unwrap()
    }

    #[test]
    fn object_validation() {
        assert!(Hypercomposition::new(vec![1, 2, 1], SymmetryMode::Hyper).is_ok());
        assert!(Hypercomposition::new(vec![2, 0, 2], SymmetryMode::Hyper).is_ok());
        assert!(Hypercomposition::new(vec![4], SymmetryMode::Hyper).is_ok());
        // Even length, odd middle, non-palindrome, zero side part, zero total.
        assert!(Hypercomposition::new(vec![1, 1], SymmetryMode::Hyper).is_err());
        assert!(Hypercomposition::new(vec![1, 1, 1], SymmetryMode::Hyper).is_err());
        assert!(Hypercomposition::new(vec![1, 2, 3], SymmetryMode::Hyper).is_err());
        assert!(Hypercomposition::new(vec![0, 2, 0], SymmetryMode::Hyper).is_err());
        assert!(Hypercomposition::new(vec![0], SymmetryMode::Hyper).is_err());
        // Plain mode: no zero parts.
        assert!(Hypercomposition::new(vec![2, 2], SymmetryMode::Plain).is_ok());
        assert!(Hypercomposition::new(vec![2, 0, 2], SymmetryMode::Plain).is_err());
    }

    #[test]
    fn object_text_round_trip() {
        let lam = hyper(&[1, 2, 1]);
        assert_eq!(lam.to_string(), "(1,2,1)");
        assert_eq!(
            Hypercomposition::parse("(1,2,1)", SymmetryMode::Hyper).unwrap(),
            lam
        );
        assert_eq!(
            Hypercomposition::parse(" ( 2 , 0 , 2 ) ", SymmetryMode::Hyper).unwrap(),
            hyper(&[2, 0, 2])
        );
        assert!(Hypercomposition::parse("1,2,1", SymmetryMode::Hyper).is_err());
        assert!(Hypercomposition::parse("(x)", SymmetryMode::Hyper).is_err());
    }

    #[test]
    fn enumerate_degree_two_hyper() {
        let objects = enumerate_hypercompositions(2, SymmetryMode::Hyper);
        assert_eq!(
            objects,
            vec![
                hyper(&[4]),
                hyper(&[1, 2, 1]),
                hyper(&[2, 0, 2]),
                hyper(&[1, 1, 0, 1, 1]),
            ]
        );
    }

    #[test]
    fn enumerate_degree_one_hyper() {
        let objects = enumerate_hypercompositions(1, SymmetryMode::Hyper);
        assert_eq!(objects, vec![hyper(&[2]), hyper(&[1, 0, 1])]);
    }

    #[test]
    fn enumerate_degree_four_plain() {
        // Compositions of 4: 2^{4-1} = 8 of them.
        let objects = enumerate_hypercompositions(4, SymmetryMode::Plain);
        assert_eq!(objects.len(), 8);
        assert_eq!(objects[0], plain(&[4]));
        // Ordered and duplicate-free.
        for w in objects.windows(2) {
            assert!((w[0].len(), w[0].parts()) < (w[1].len(), w[1].parts()));
        }
    }

    #[test]
    fn enumerate_degree_three_hyper() {
        let objects = enumerate_hypercompositions(3, SymmetryMode::Hyper);
        assert_eq!(objects.len(), 8);
        assert!(objects.contains(&hyper(&[1, 1, 1, 0, 1, 1, 1])));
        assert!(objects.contains(&hyper(&[3, 0, 3])));
        assert!(objects.contains(&hyper(&[1, 4, 1])));
    }

    #[test]
    fn labelling_function_examples() {
        assert_eq!(labelling_function(&hyper(&[1, 2, 1]), 2).unwrap(), 2);
        assert_eq!(labelling_function(&hyper(&[4]), 3).unwrap(), 1);
        // Block sizes 2,0,2: positions 3,4 fall in block 3; label 2 never occurs.
        assert_eq!(labelling_function(&hyper(&[2, 0, 2]), 3).unwrap(), 3);
        assert_eq!(labelling_function(&hyper(&[2, 0, 2]), 2).unwrap(), 1);
        assert!(labelling_function(&hyper(&[4]), 5).is_err());
        assert!(labelling_function(&hyper(&[4]), 0).is_err());
    }

    #[test]
    fn tuples_of_121() {
        let lam = hyper(&[1, 2, 1]);
        let tuples = enumerate_tuples(&lam);
        let expect: Vec<Vec<usize>> = vec![
            vec![1, 2, 2, 3],
            vec![2, 1, 3, 2],
            vec![2, 3, 1, 2],
            vec![3, 2, 2, 1],
        ];
        assert_eq!(
            tuples.iter().map(|t| t.labels().to_vec()).collect::<Vec<_>>(),
            expect
        );
        assert_eq!(tuples[0], base_tuple(&lam));
    }

    #[test]
    fn tuples_of_4_and_plain_22() {
        assert_eq!(enumerate_tuples(&hyper(&[4])).len(), 1);
        assert_eq!(
            enumerate_tuples(&hyper(&[4]))[0].labels(),
            &[1, 1, 1, 1]
        );
        // Plain (2,2) at n = 4: six coset representatives.
        let tuples = enumerate_tuples(&plain(&[2, 2]));
        assert_eq!(tuples.len(), 6);
        assert_eq!(tuples[0].labels(), &[1, 1, 2, 2]);
    }

    #[test]
    fn tuples_are_valid_and_sorted() {
        for n in 1..=3 {
            for lam in enumerate_hypercompositions(n, SymmetryMode::Hyper) {
                let tuples = enumerate_tuples(&lam);
                for t in &tuples {
                    LabelTuple::new(t.labels().to_vec(), lam.clone()).unwrap();
                }
                for w in tuples.windows(2) {
                    assert!(w[0].labels() < w[1].labels());
                }
            }
        }
    }

    #[test]
    fn action_examples() {
        let lam = hyper(&[1, 2, 1]);
        let t = base_tuple(&lam);
        let id = GroupElement::identity(4);
        assert_eq!(act(&id, &t).unwrap(), t);
        // Swap of the two middle positions fixes (1,2,2,3).
        let swap_mid = GroupElement::from_images_symmetric(vec![1, 3, 2, 4]).unwrap();
        assert_eq!(act(&swap_mid, &t).unwrap(), t);
        // The outer flip sends (1,2,2,3) to (3,2,2,1).
        let flip_outer = GroupElement::from_images_symmetric(vec![4, 2, 3, 1]).unwrap();
        assert_eq!(act(&flip_outer, &t).unwrap().labels(), &[3, 2, 2, 1]);
        // Length mismatch is rejected.
        assert!(act(&GroupElement::identity(2), &t).is_err());
    }

    #[test]
    fn group_sizes() {
        assert_eq!(
            group_elements(1, SymmetryMode::Hyper).unwrap().count(),
            2
        );
        assert_eq!(
            group_elements(2, SymmetryMode::Hyper).unwrap().count(),
            8
        );
        assert_eq!(
            group_elements(3, SymmetryMode::Plain).unwrap().count(),
            6
        );
        assert_eq!(
            group_elements(3, SymmetryMode::Hyper).unwrap().count(),
            48
        );
        assert_eq!(group_order(4, SymmetryMode::Hyper), BigUint::from(384u32));
    }

    #[test]
    fn group_elements_are_symmetric_and_distinct() {
        let elements: Vec<_> = group_elements(2, SymmetryMode::Hyper).unwrap().collect();
        for g in &elements {
            assert!(g.is_vertically_symmetric());
        }
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), elements.len());
    }

    #[test]
    fn group_cap_is_enforced() {
        match group_elements_with_cap(10, SymmetryMode::Hyper, 1000) {
            Err(HypercombError::CapExceeded { cap: 1000, .. }) => {}
            Err(other) => panic!("unexpected error {other:?}"),
            Ok(_) => panic!("expected the cap to reject the enumeration"),
        }
    }

    #[test]
    fn stabilizer_orders() {
        assert_eq!(stabilizer_order(&hyper(&[1, 2, 1])), BigUint::from(2u32));
        assert_eq!(stabilizer_order(&hyper(&[2, 0, 2])), BigUint::from(2u32));
        assert_eq!(
            stabilizer_order(&hyper(&[1, 1, 0, 1, 1])),
            BigUint::from(1u32)
        );
        assert_eq!(stabilizer_order(&hyper(&[4])), BigUint::from(8u32));
        assert_eq!(stabilizer_order(&plain(&[2, 2])), BigUint::from(4u32));
    }

    #[test]
    fn orbit_counting_identity() {
        // |tuples(lambda)| * |stabilizer| = |group| for every object, n <= 3.
        for mode in [SymmetryMode::Hyper, SymmetryMode::Plain] {
            for n in 1..=3 {
                let order = group_order(n, mode);
                for lam in enumerate_hypercompositions(n, mode) {
                    let count = BigUint::from(enumerate_tuples(&lam).len());
                    assert_eq!(count * stabilizer_order(&lam), order, "object {lam}");
                }
            }
        }
    }

    #[test]
    fn action_is_a_group_action_exhaustively_small() {
        for n in 1..=2 {
            let elements: Vec<_> = group_elements(n, SymmetryMode::Hyper).unwrap().collect();
            for lam in enumerate_hypercompositions(n, SymmetryMode::Hyper) {
                for t in enumerate_tuples(&lam) {
                    for g in &elements {
                        for h in &elements {
                            let gh = g.compose(h).unwrap();
                            let lhs = act(&gh, &t).unwrap();
                            let rhs = act(g, &act(h, &t).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}
