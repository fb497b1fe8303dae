//! The free associative `Z2`-graded algebra over a fixed generator alphabet.
//!
//! Elements are finite formal sums of words with coefficients in any
//! [`Coefficient`] field. Quotients by relations are the business of the
//! [`rewrite`](crate::rewrite) module; everything here is free.

mod element;
mod letter;

pub use element::{BracketKind, Element, ElementParity};
pub use letter::{Letter, LetterKind, Parity, Word};
