//! A small expression language for elements of the free superalgebra:
//! generators, scalars in `Q(q)`, sums, products, quotients by scalars and
//! the three (weighted) brackets.

mod ast;
mod bind;
mod parser;
mod pretty;

pub use ast::{Expr, GenRef, ScalarLit, Weight};
pub use bind::{bind, bind_letter, BindError};
pub use parser::{parse, ParseError};
pub use pretty::pretty;

use crate::presentations::AlgebraSignature;
use crate::scalars::QScalar;
use crate::superalg::Element;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Bind(#[from] BindError),
}

/// Parses and binds in one step.
pub fn parse_element(sig: &AlgebraSignature, text: &str) -> Result<Element<QScalar>, DslError> {
    Ok(bind(sig, &parse(text)?)?)
}
