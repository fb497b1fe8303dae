//! Exact coefficient arithmetic.
//!
//! Three coefficient domains are used across the crate:
//!
//! * [`Rational`] arbitrary-precision rationals (also the coefficient field of
//!   sampled-`q` runs and of the bracket-identity sampler);
//! * [`Sqrt2Scalar`] the quadratic field `Q(sqrt 2)`, which holds the entries
//!   of the defining matrix realization;
//! * [`QScalar`] the field `Q(q)` of rational functions in the deformation
//!   parameter.
//!
//! Generic algebra code is written against the [`Coefficient`] trait.

mod laurent;
mod qscalar;
mod sqrt2;

use alloc::string::String;
use core::fmt;

use num_traits::{One, Zero};

pub use laurent::LaurentPoly;
pub use qscalar::QScalar;
pub use sqrt2::Sqrt2Scalar;

/// Arbitrary-precision rational number (always stored reduced, positive
/// denominator).
pub type Rational = num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by the zero scalar")]
    DivisionByZero,
    #[error("cannot substitute q = 0 into a Laurent expression")]
    ZeroSubstitution,
    #[error("denominator {denominator} vanishes at q = {at}")]
    Pole {
        at: Rational,
        denominator: LaurentPoly,
    },
}

/// A field the free algebra and the rewriting engine can compute over.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn recip(&self) -> Option<Self>;
    /// Renders with enough parentheses to be used as a multiplicative factor.
    fn render_factor(&self) -> String;
}

impl Coefficient for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn one() -> Self {
        QScalar::one()
    }
    fn from_int(n: i64) -> Self {
        QScalar::from_int(n)
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        QScalar::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn negated(&self) -> Self {
        self.neg_ref()
    }
    fn recip(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn render_factor(&self) -> String {
        if self.is_monomial() {
            alloc::format!("{self}")
        } else {
            alloc::format!("({self})")
        }
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn recip(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(Rational::recip(self))
        }
    }
    fn render_factor(&self) -> String {
        if self.is_integer() {
            alloc::format!("{self}")
        } else {
            alloc::format!("({self})")
        }
    }
}

/// Parses `N` or `N/D` into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}
