//! Exact-arithmetic engine for the hyperoctahedral Schur category and its
//! diagrammatic web calculus.
//!
//! The crate is organized bottom-up:
//!
//! * [`hypercomb`] — the combinatorial substrate: hypercompositions (the
//!   objects), label tuples, and the hyperoctahedral group `H_n` (or the
//!   symmetric group `S_n` in plain mode) acting on them.
//! * [`schurcat`] — the Schur category itself: the matrix-indexed morphism
//!   basis, orbit classification of tuple pairs, and composition via exact
//!   integer structure constants.
//! * [`denseoracle`] — an independent verification path that realizes each
//!   basis morphism as an explicit 0/1 matrix on tuple bases, multiplies
//!   matrices directly, and decomposes products back into the basis.
//! * [`webdsl`] — the diagrammatic side: a textual DSL for symmetric web
//!   diagrams, an evaluation functor onto `schurcat`, reduced chicken-foot
//!   diagram construction, and semantic normalization.
//! * [`relationsuite`] — machine verification of the category's defining and
//!   derived relations, numeric identities, and functor/oracle agreement.
//!
//! All arithmetic is exact: thicknesses and counts are machine integers and
//! morphism coefficients are arbitrary-precision integers. There is no
//! floating point anywhere in the crate.

pub mod denseoracle;
pub mod hypercomb;
pub mod relationsuite;
pub mod schurcat;
pub mod webdsl;
