//! Exact computation in the orthosymplectic Lie superalgebra `osp(2n+1/2m)`
//! and its quantum deformation `U_q[osp(2n+1/2m)]`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; IO, reports and the command line live in
//! the `osp-cli` crate.
//!
//! Layout:
//!
//! * [`scalars`] exact coefficients: rationals, `Q(sqrt 2)` and the field of
//!   rational functions in `q`.
//! * [`superalg`] the free `Z2`-graded algebra on a fixed alphabet, with the
//!   three weighted brackets.
//! * [`presentations`] Cartan matrix, Chevalley and Green presentations and
//!   the conversion formulas between the two generator systems.
//! * [`matrixrep`] the defining matrix realization (`q = 1`) used as an
//!   exact oracle for the classical relations.
//! * [`rewrite`] oriented rewriting, bounded completion and the verifiers
//!   for the deformed identities.
//! * [`dsl`] a parser and printer for bracketed generator expressions.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dsl;
pub mod matrixrep;
pub mod presentations;
pub mod rewrite;
pub mod scalars;
pub mod superalg;

pub use presentations::AlgebraSignature;
pub use scalars::{Coefficient, QScalar, Rational, Sqrt2Scalar};

pub use superalg::{Element, Letter, LetterKind, Parity, Word};
