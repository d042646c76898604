//! Textual diagram language for the web category.
//!
//! A diagram is a chain of *layers* read bottom-to-top and separated by
//! `;`. Each layer lists generators left-to-right: ordinary strand
//! generators `m(a,b)` (merge), `s(a,b)` (split), `x(a,b)` (cross) and
//! `id(a)`, optionally followed — after `|` — by a single generator on the
//! reflection axis: `M(a,m)`, `S(a,m)`, `X(a,m)` or `ID(m)`, whose middle
//! thickness `m` is always even. In hyper mode only the left half of a
//! layer is written; the right half is its mirror image. An expression is
//! an integer combination of chains, e.g. `2*[m(1,1)] + -1*[x(1,1)];[m(1,1)]`.
//!
//! Every layer maps to a single basis element of the Schur category, and a
//! chain evaluates to the composition of its layers. The reverse direction
//! — a canonical diagram for every basis element — lives in [`reduce`].

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use thiserror::Error;

use crate::hypercomb::{Hypercomposition, SymmetryMode};
use crate::schurcat::{Morphism, OrbitMatrix};

mod parser;
mod reduce;

pub use parser::parse_expr;
pub use reduce::{normal_form, reduced_cfd};

/// Errors from the diagram layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WebError {
    /// Lexical or syntactic error, located by byte offset into the input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    /// A layer that cannot be assembled into a valid object interface.
    #[error("invalid layer: {reason}")]
    InvalidLayer { reason: String },
    /// Adjacent layers whose objects do not line up; `layer` is the
    /// zero-based index of the upper layer.
    #[error("layer {layer} expects input {expected} but the layer below outputs {found}")]
    InterfaceMismatch {
        layer: usize,
        expected: String,
        found: String,
    },
    /// Terms of one expression must share source and target.
    #[error("term mismatch: expected a diagram {expected}, found {found}")]
    TermMismatch { expected: String, found: String },
    /// An expression with no terms cannot be built directly from text.
    #[error("expression has no terms")]
    EmptyExpression,
}

/// An off-axis generator, acting on one or two adjacent strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfGen {
    /// `id(a)`: a single strand of thickness `a`.
    Id(usize),
    /// `m(a,b)`: merges thicknesses `a` and `b` (left to right) into `a+b`.
    Merge(usize, usize),
    /// `s(a,b)`: splits `a+b` into `a` and `b` (left to right).
    Split(usize, usize),
    /// `x(a,b)`: crosses `a` (left) over `b` (right).
    Cross(usize, usize),
}

impl HalfGen {
    fn validate(&self) -> Result<(), String> {
        let ok = match self {
            HalfGen::Id(a) => *a >= 1,
            HalfGen::Merge(a, b) | HalfGen::Split(a, b) | HalfGen::Cross(a, b) => {
                *a >= 1 && *b >= 1
            }
        };
        if ok {
            Ok(())
        } else {
            Err(format!("{self} requires positive thicknesses"))
        }
    }

    /// Strand thicknesses this generator consumes, left to right.
    pub fn inputs(&self) -> Vec<usize> {
        match self {
            HalfGen::Id(a) => vec![*a],
            HalfGen::Merge(a, b) => vec![*a, *b],
            HalfGen::Split(a, b) => vec![a + b],
            HalfGen::Cross(a, b) => vec![*a, *b],
        }
    }

    /// Strand thicknesses this generator produces, left to right.
    pub fn outputs(&self) -> Vec<usize> {
        match self {
            HalfGen::Id(a) => vec![*a],
            HalfGen::Merge(a, b) => vec![a + b],
            HalfGen::Split(a, b) => vec![*a, *b],
            HalfGen::Cross(a, b) => vec![*b, *a],
        }
    }

    /// The generator's block in the layer matrix: rows over its outputs,
    /// columns over its inputs.
    fn block(&self) -> Vec<Vec<usize>> {
        match self {
            HalfGen::Id(a) => vec![vec![*a]],
            HalfGen::Merge(a, b) => vec![vec![*a, *b]],
            HalfGen::Split(a, b) => vec![vec![*a], vec![*b]],
            HalfGen::Cross(a, b) => vec![vec![0, *b], vec![*a, 0]],
        }
    }

    /// Mirror image under a left-right flip.
    pub fn hflip(&self) -> HalfGen {
        match self {
            HalfGen::Id(a) => HalfGen::Id(*a),
            HalfGen::Merge(a, b) => HalfGen::Merge(*b, *a),
            HalfGen::Split(a, b) => HalfGen::Split(*b, *a),
            HalfGen::Cross(a, b) => HalfGen::Cross(*b, *a),
        }
    }

    /// Mirror image under an upside-down flip (merge and split trade roles).
    pub fn vflip(&self) -> HalfGen {
        match self {
            HalfGen::Id(a) => HalfGen::Id(*a),
            HalfGen::Merge(a, b) => HalfGen::Split(*a, *b),
            HalfGen::Split(a, b) => HalfGen::Merge(*a, *b),
            HalfGen::Cross(a, b) => HalfGen::Cross(*b, *a),
        }
    }
}

impl fmt::Display for HalfGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfGen::Id(a) => write!(f, "id({a})"),
            HalfGen::Merge(a, b) => write!(f, "m({a},{b})"),
            HalfGen::Split(a, b) => write!(f, "s({a},{b})"),
            HalfGen::Cross(a, b) => write!(f, "x({a},{b})"),
        }
    }
}

/// A generator sitting on the reflection axis. The first argument is the
/// thickness of the mirrored strand pair it involves; the second argument is
/// the (even, possibly zero) thickness of the axis strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisGen {
    /// `ID(m)`: the axis strand alone, `m` even and positive.
    Id(usize),
    /// `M(a,m)`: merges the strand pair `a` and the axis strand `m` into a
    /// single axis strand `2a+m`.
    Merge(usize, usize),
    /// `S(a,m)`: splits the axis strand `2a+m` into a pair `a` and `m`.
    Split(usize, usize),
    /// `X(a,m)`: crosses the strand pair `a` over the axis strand `m`.
    Cross(usize, usize),
}

impl AxisGen {
    fn validate(&self) -> Result<(), String> {
        match self {
            AxisGen::Id(m) => {
                if *m == 0 {
                    Err("ID requires a positive thickness".to_string())
                } else if *m % 2 != 0 {
                    Err(format!("axis thickness {m} must be even"))
                } else {
                    Ok(())
                }
            }
            AxisGen::Merge(a, m) | AxisGen::Split(a, m) | AxisGen::Cross(a, m) => {
                if *a == 0 {
                    Err(format!("{self} requires a positive pair thickness"))
                } else if *m % 2 != 0 {
                    Err(format!("axis thickness {m} must be even"))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// The middle portion of the layer's input object.
    pub fn input_parts(&self) -> Vec<usize> {
        match self {
            AxisGen::Id(m) => vec![*m],
            AxisGen::Merge(a, m) => vec![*a, *m, *a],
            AxisGen::Split(a, m) => vec![2 * a + m],
            AxisGen::Cross(a, m) => vec![*a, *m, *a],
        }
    }

    /// The middle portion of the layer's output object.
    pub fn output_parts(&self) -> Vec<usize> {
        match self {
            AxisGen::Id(m) => vec![*m],
            AxisGen::Merge(a, m) => vec![2 * a + m],
            AxisGen::Split(a, m) => vec![*a, *m, *a],
            AxisGen::Cross(a, m) => vec![*a, *m, *a],
        }
    }

    /// The central block of the layer matrix.
    fn block(&self) -> Vec<Vec<usize>> {
        match self {
            AxisGen::Id(m) => vec![vec![*m]],
            AxisGen::Merge(a, m) => vec![vec![*a, *m, *a]],
            AxisGen::Split(a, m) => vec![vec![*a], vec![*m], vec![*a]],
            AxisGen::Cross(a, m) => vec![
                vec![0, 0, *a],
                vec![0, *m, 0],
                vec![*a, 0, 0],
            ],
        }
    }

    /// Upside-down flip; axis generators are symmetric left-to-right, so
    /// there is no horizontal counterpart.
    pub fn vflip(&self) -> AxisGen {
        match self {
            AxisGen::Id(m) => AxisGen::Id(*m),
            AxisGen::Merge(a, m) => AxisGen::Split(*a, *m),
            AxisGen::Split(a, m) => AxisGen::Merge(*a, *m),
            AxisGen::Cross(a, m) => AxisGen::Cross(*a, *m),
        }
    }
}

impl fmt::Display for AxisGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisGen::Id(m) => write!(f, "ID({m})"),
            AxisGen::Merge(a, m) => write!(f, "M({a},{m})"),
            AxisGen::Split(a, m) => write!(f, "S({a},{m})"),
            AxisGen::Cross(a, m) => write!(f, "X({a},{m})"),
        }
    }
}

/// One horizontal slice of a diagram: the left-half generators plus an
/// optional axis generator. Input and output objects are computed once at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    mode: SymmetryMode,
    left: Vec<HalfGen>,
    axis: Option<AxisGen>,
    input: Hypercomposition,
    output: Hypercomposition,
}

impl Layer {
    /// Validates the generators and assembles the interface objects.
    pub fn assemble(
        mode: SymmetryMode,
        left: Vec<HalfGen>,
        axis: Option<AxisGen>,
    ) -> Result<Layer, WebError> {
        for g in &left {
            g.validate().map_err(|reason| WebError::InvalidLayer { reason })?;
        }
        if let Some(ax) = &axis {
            if mode == SymmetryMode::Plain {
                return Err(WebError::InvalidLayer {
                    reason: "axis generators require hyper mode".to_string(),
                });
            }
            ax.validate()
                .map_err(|reason| WebError::InvalidLayer { reason })?;
        }
        if left.is_empty() && axis.is_none() {
            return Err(WebError::InvalidLayer {
                reason: "layer has no generators".to_string(),
            });
        }
        let assemble_object = |halves: &dyn Fn(&HalfGen) -> Vec<usize>,
                               middle: Vec<usize>|
         -> Result<Hypercomposition, WebError> {
            let left_parts: Vec<usize> = left.iter().flat_map(|g| halves(g)).collect();
            let parts = match mode {
                SymmetryMode::Plain => left_parts,
                SymmetryMode::Hyper => {
                    let mut parts = left_parts.clone();
                    parts.extend(middle);
                    parts.extend(left_parts.iter().rev());
                    parts
                }
            };
            Hypercomposition::new(parts, mode).map_err(|e| WebError::InvalidLayer {
                reason: e.to_string(),
            })
        };
        let input = assemble_object(
            &|g| g.inputs(),
            axis.as_ref().map(|a| a.input_parts()).unwrap_or(vec![0]),
        )?;
        let output = assemble_object(
            &|g| g.outputs(),
            axis.as_ref().map(|a| a.output_parts()).unwrap_or(vec![0]),
        )?;
        Ok(Layer {
            mode,
            left,
            axis,
            input,
            output,
        })
    }

    /// The identity layer of an object.
    pub fn identity(object: &Hypercomposition) -> Layer {
        let mut builder = LayerBuilder::new(object.mode());
        match object.middle_index() {
            Some(mid) => {
                for &p in &object.parts()[..mid] {
                    builder.push_id(p);
                }
                builder.axis_id(object.parts()[mid]);
            }
            None => {
                for &p in object.parts() {
                    builder.push_id(p);
                }
            }
        }
        builder
            .build()
            .expect("the identity layer of a valid object is valid")
    }

    pub fn mode(&self) -> SymmetryMode {
        self.mode
    }

    pub fn left(&self) -> &[HalfGen] {
        &self.left
    }

    pub fn axis(&self) -> Option<&AxisGen> {
        self.axis.as_ref()
    }

    pub fn input(&self) -> &Hypercomposition {
        &self.input
    }

    pub fn output(&self) -> &Hypercomposition {
        &self.output
    }

    /// The basis element this layer evaluates to: left generator blocks on
    /// the diagonal, the axis block in the centre, and the mirror of the
    /// left blocks in the lower right.
    pub fn to_orbit_matrix(&self) -> OrbitMatrix {
        let nrows = self.output.len();
        let ncols = self.input.len();
        let mut mat = vec![vec![0usize; ncols]; nrows];
        let mut r = 0;
        let mut c = 0;
        for g in &self.left {
            for (dr, row) in g.block().iter().enumerate() {
                for (dc, &v) in row.iter().enumerate() {
                    mat[r + dr][c + dc] = v;
                }
            }
            r += g.outputs().len();
            c += g.inputs().len();
        }
        if self.mode == SymmetryMode::Hyper {
            if let Some(ax) = &self.axis {
                for (dr, row) in ax.block().iter().enumerate() {
                    for (dc, &v) in row.iter().enumerate() {
                        mat[r + dr][c + dc] = v;
                    }
                }
            }
            // Mirror the left blocks into the lower-right quadrant.
            for rr in 0..r {
                for cc in 0..c {
                    mat[nrows - 1 - rr][ncols - 1 - cc] = mat[rr][cc];
                }
            }
        }
        OrbitMatrix::new(mat, self.output.clone(), self.input.clone())
            .expect("layer matrices satisfy the margin and symmetry conditions")
    }

    /// Left-right mirror image: reversed generator order, each generator
    /// flipped. A layer holding an axis generator is its own mirror, since
    /// its picture (left half plus implied reflection) is symmetric.
    pub fn hflip(&self) -> Layer {
        if self.mode == SymmetryMode::Hyper && self.axis.is_some() {
            // A layer touching the axis already contains its own mirror
            // image, so reflecting the picture changes nothing.
            return self.clone();
        }
        Layer::assemble(
            self.mode,
            self.left.iter().rev().map(HalfGen::hflip).collect(),
            None,
        )
        .expect("the mirror of a valid layer is valid")
    }

    /// Upside-down mirror image: same generator order, merges and splits
    /// traded, interfaces swapped.
    pub fn vflip(&self) -> Layer {
        Layer::assemble(
            self.mode,
            self.left.iter().map(HalfGen::vflip).collect(),
            self.axis.as_ref().map(AxisGen::vflip),
        )
        .expect("the mirror of a valid layer is valid")
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write!(f, "{}", self.left.iter().join(","))?;
        if let Some(ax) = &self.axis {
            if self.left.is_empty() {
                write!(f, "{ax}")?;
            } else {
                write!(f, "|{ax}")?;
            }
        }
        write!(f, "]")
    }
}

/// Incremental layer construction with elision of degenerate generators: a
/// zero thickness turns a merge, split or cross into the identity of the
/// remaining strand (or into nothing), and an axis generator with a zero
/// pair thickness degenerates to the bare axis strand. Relation families
/// instantiate their boundary parameter values through this builder.
#[derive(Debug, Clone)]
pub struct LayerBuilder {
    mode: SymmetryMode,
    left: Vec<HalfGen>,
    axis: Option<AxisGen>,
}

impl LayerBuilder {
    pub fn new(mode: SymmetryMode) -> Self {
        LayerBuilder {
            mode,
            left: Vec::new(),
            axis: None,
        }
    }

    pub fn push_id(&mut self, a: usize) -> &mut Self {
        if a > 0 {
            self.left.push(HalfGen::Id(a));
        }
        self
    }

    pub fn push_merge(&mut self, a: usize, b: usize) -> &mut Self {
        match (a, b) {
            (0, 0) => {}
            (0, b) => {
                self.left.push(HalfGen::Id(b));
            }
            (a, 0) => {
                self.left.push(HalfGen::Id(a));
            }
            (a, b) => {
                self.left.push(HalfGen::Merge(a, b));
            }
        }
        self
    }

    pub fn push_split(&mut self, a: usize, b: usize) -> &mut Self {
        match (a, b) {
            (0, 0) => {}
            (0, b) => {
                self.left.push(HalfGen::Id(b));
            }
            (a, 0) => {
                self.left.push(HalfGen::Id(a));
            }
            (a, b) => {
                self.left.push(HalfGen::Split(a, b));
            }
        }
        self
    }

    pub fn push_cross(&mut self, a: usize, b: usize) -> &mut Self {
        match (a, b) {
            (0, 0) => {}
            (0, b) => {
                self.left.push(HalfGen::Id(b));
            }
            (a, 0) => {
                self.left.push(HalfGen::Id(a));
            }
            (a, b) => {
                self.left.push(HalfGen::Cross(a, b));
            }
        }
        self
    }

    fn set_axis(&mut self, ax: AxisGen) {
        assert!(self.axis.is_none(), "a layer holds at most one axis generator");
        self.axis = Some(ax);
    }

    pub fn axis_id(&mut self, m: usize) -> &mut Self {
        if m > 0 {
            self.set_axis(AxisGen::Id(m));
        }
        self
    }

    pub fn axis_merge(&mut self, a: usize, m: usize) -> &mut Self {
        if a == 0 {
            return self.axis_id(m);
        }
        self.set_axis(AxisGen::Merge(a, m));
        self
    }

    pub fn axis_split(&mut self, a: usize, m: usize) -> &mut Self {
        if a == 0 {
            return self.axis_id(m);
        }
        self.set_axis(AxisGen::Split(a, m));
        self
    }

    pub fn axis_cross(&mut self, a: usize, m: usize) -> &mut Self {
        if a == 0 {
            return self.axis_id(m);
        }
        self.set_axis(AxisGen::Cross(a, m));
        self
    }

    pub fn build(&self) -> Result<Layer, WebError> {
        Layer::assemble(self.mode, self.left.clone(), self.axis)
    }
}

/// A vertical composite of layers, bottom-to-top, with verified interfaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    layers: Vec<Layer>,
}

impl Chain {
    /// Wraps `layers` (bottom first), checking that each layer's output is
    /// the next layer's input.
    pub fn new(layers: Vec<Layer>) -> Result<Chain, WebError> {
        if layers.is_empty() {
            return Err(WebError::InvalidLayer {
                reason: "a chain needs at least one layer".to_string(),
            });
        }
        for (i, pair) in layers.windows(2).enumerate() {
            if pair[0].output() != pair[1].input() {
                return Err(WebError::InterfaceMismatch {
                    layer: i + 1,
                    expected: pair[1].input().to_string(),
                    found: pair[0].output().to_string(),
                });
            }
        }
        Ok(Chain { layers })
    }

    pub fn single(layer: Layer) -> Chain {
        Chain {
            layers: vec![layer],
        }
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn mode(&self) -> SymmetryMode {
        self.layers[0].mode()
    }

    pub fn source(&self) -> &Hypercomposition {
        self.layers[0].input()
    }

    pub fn target(&self) -> &Hypercomposition {
        self.layers
            .last()
            .expect("chains are non-empty")
            .output()
    }

    /// Stacks `upper` on top of `self`.
    pub fn then(&self, upper: &Chain) -> Result<Chain, WebError> {
        let mut layers = self.layers.clone();
        layers.extend(upper.layers.iter().cloned());
        Chain::new(layers)
    }

    /// The morphism this diagram denotes: the composition of its layers'
    /// basis elements, bottom layer applied first.
    pub fn evaluate(&self) -> Morphism {
        let mut acc = Morphism::basis(self.layers[0].to_orbit_matrix());
        for layer in &self.layers[1..] {
            acc = Morphism::basis(layer.to_orbit_matrix())
                .compose(&acc)
                .expect("interfaces were verified at construction");
        }
        acc
    }

    /// Left-right mirror image.
    pub fn hflip(&self) -> Chain {
        if self.mode() == SymmetryMode::Hyper && self.layers.iter().any(|l| l.axis.is_some()) {
            // Once any layer touches the axis, the mirrored word is the
            // chain itself: flipping only the axis-free layers would
            // tear the interfaces apart, and the full picture is
            // left-right symmetric anyway.
            return self.clone();
        }
        Chain {
            layers: self.layers.iter().map(Layer::hflip).collect(),
        }
    }

    /// Upside-down mirror image: layer order reverses.
    pub fn vflip(&self) -> Chain {
        Chain {
            layers: self.layers.iter().rev().map(Layer::vflip).collect(),
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.layers.iter().join(" ; "))
    }
}

/// An integer combination of chains sharing one source and target. The
/// zero combination keeps its objects and prints as `0` (which is not
/// itself parseable input).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramExpr {
    source: Hypercomposition,
    target: Hypercomposition,
    terms: Vec<(BigInt, Chain)>,
}

impl DiagramExpr {
    /// An expression with explicit objects; every chain must match them.
    pub fn new(
        source: Hypercomposition,
        target: Hypercomposition,
        terms: Vec<(BigInt, Chain)>,
    ) -> Result<DiagramExpr, WebError> {
        for (_, chain) in &terms {
            if chain.source() != &source || chain.target() != &target {
                return Err(WebError::TermMismatch {
                    expected: format!("{source} -> {target}"),
                    found: format!("{} -> {}", chain.source(), chain.target()),
                });
            }
        }
        Ok(DiagramExpr {
            source,
            target,
            terms,
        })
    }

    /// An expression from non-empty terms, objects taken from the first.
    pub fn from_terms(terms: Vec<(BigInt, Chain)>) -> Result<DiagramExpr, WebError> {
        let first = terms.first().ok_or(WebError::EmptyExpression)?;
        let source = first.1.source().clone();
        let target = first.1.target().clone();
        DiagramExpr::new(source, target, terms)
    }

    pub fn from_chain(chain: Chain) -> DiagramExpr {
        DiagramExpr {
            source: chain.source().clone(),
            target: chain.target().clone(),
            terms: vec![(BigInt::from(1), chain)],
        }
    }

    pub fn source(&self) -> &Hypercomposition {
        &self.source
    }

    pub fn target(&self) -> &Hypercomposition {
        &self.target
    }

    pub fn terms(&self) -> &[(BigInt, Chain)] {
        &self.terms
    }

    pub fn evaluate(&self) -> Morphism {
        let mut acc = Morphism::zero(self.target.clone(), self.source.clone());
        for (coeff, chain) in &self.terms {
            acc = acc
                .add(&chain.evaluate().scale(coeff))
                .expect("terms share one Hom-space");
        }
        acc
    }

    /// Left-right mirror image of every term. An expression with a term
    /// touching the axis is its own mirror (see [`Chain::hflip`]); the
    /// check is made across all terms at once so the mirrored terms keep
    /// sharing one Hom-space.
    pub fn hflip(&self) -> DiagramExpr {
        let touches_axis = self
            .terms
            .iter()
            .any(|(_, chain)| chain.layers().iter().any(|l| l.axis.is_some()));
        if self.source.mode() == SymmetryMode::Hyper && touches_axis {
            return self.clone();
        }
        let terms: Vec<(BigInt, Chain)> = self
            .terms
            .iter()
            .map(|(c, chain)| (c.clone(), chain.hflip()))
            .collect();
        DiagramExpr {
            source: mirror_object(&self.source),
            target: mirror_object(&self.target),
            terms,
        }
    }

    /// Upside-down mirror image of every term; source and target swap.
    pub fn vflip(&self) -> DiagramExpr {
        let terms: Vec<(BigInt, Chain)> = self
            .terms
            .iter()
            .map(|(c, chain)| (c.clone(), chain.vflip()))
            .collect();
        DiagramExpr {
            source: self.target.clone(),
            target: self.source.clone(),
            terms,
        }
    }
}

/// Where a horizontal mirror sends an object: plain objects reverse,
/// mirrored-strip objects reverse within each half around the fixed
/// middle part.
fn mirror_object(obj: &Hypercomposition) -> Hypercomposition {
    let parts = obj.parts();
    let mirrored: Vec<usize> = match obj.mode() {
        SymmetryMode::Plain => parts.iter().rev().copied().collect(),
        SymmetryMode::Hyper => {
            let mid = parts.len() / 2;
            let mut v: Vec<usize> = parts[..mid].iter().rev().copied().collect();
            v.push(parts[mid]);
            v.extend(parts[mid + 1..].iter().rev().copied());
            v
        }
    };
    Hypercomposition::new(mirrored, obj.mode()).expect("the mirror of a valid object is valid")
}

impl fmt::Display for DiagramExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        write!(
            f,
            "{}",
            self.terms
                .iter()
                .map(|(c, chain)| format!("{c}*{chain}"))
                .join(" + ")
        )
    }
}
