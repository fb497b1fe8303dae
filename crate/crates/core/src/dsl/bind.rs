use alloc::string::String;

use super::ast::{Expr, GenRef, ScalarLit, Weight};
use super::pretty::pretty;
use crate::presentations::AlgebraSignature;
use crate::scalars::QScalar;
use crate::superalg::{Element, Letter, LetterKind};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BindError {
    #[error("generator {generator} is out of range: index must lie in 1..={max}")]
    IndexOutOfRange { generator: String, max: u16 },
    #[error("divisor `{0}` is not a scalar")]
    NonScalarDivisor(String),
    #[error("divisor `{0}` is zero")]
    ZeroDivisor(String),
    #[error("bracket weight `{0}` is not a scalar")]
    NonScalarWeight(String),
}

/// Resolves a generator reference against the signature, checking its index.
pub fn bind_letter(sig: &AlgebraSignature, g: &GenRef) -> Result<Letter, BindError> {
    if g.kind == LetterKind::Abstract {
        return Ok(Letter::abstract_letter(g.index, g.abstract_parity));
    }
    let max = sig.rank();
    if !sig.contains(g.index) {
        return Err(BindError::IndexOutOfRange {
            generator: alloc::format!("{g}"),
            max,
        });
    }
    Ok(sig.letter(g.kind, g.index))
}

/// Evaluates an expression in the free algebra over `Q(q)`.
pub fn bind(sig: &AlgebraSignature, e: &Expr) -> Result<Element<QScalar>, BindError> {
    Ok(match e {
        Expr::Gen(g) => Element::letter(bind_letter(sig, g)?),
        Expr::Scalar(ScalarLit::Int(n)) => Element::scalar(QScalar::from_bigint(n.clone())),
        Expr::Scalar(ScalarLit::QPow(k)) => Element::scalar(QScalar::q_pow(*k)),
        Expr::Neg(x) => bind(sig, x)?.neg(),
        Expr::Add(l, r) => bind(sig, l)?.add(&bind(sig, r)?),
        Expr::Sub(l, r) => bind(sig, l)?.sub(&bind(sig, r)?),
        Expr::Mul(l, r) => bind(sig, l)?.mul(&bind(sig, r)?),
        Expr::Div(l, r) => {
            let d = bind(sig, r)?
                .as_scalar()
                .ok_or_else(|| BindError::NonScalarDivisor(pretty(r)))?;
            let inv = d.inv().map_err(|_| BindError::ZeroDivisor(pretty(r)))?;
            bind(sig, l)?.scale(&inv)
        }
        Expr::Bracket {
            kind,
            left,
            right,
            weight,
        } => {
            let w = match weight {
                Weight::One => QScalar::one(),
                Weight::QPow(k) => QScalar::q_pow(*k),
                Weight::Scalar(x) => bind(sig, x)?
                    .as_scalar()
                    .ok_or_else(|| BindError::NonScalarWeight(pretty(x)))?,
            };
            Element::bracket(*kind, &bind(sig, left)?, &bind(sig, right)?, &w)
        }
    })
}
