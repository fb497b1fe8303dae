use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{poly_exact_div, poly_gcd, poly_trim, LaurentPoly};
use super::{Rational, ScalarError};

/// An element of `Q(q)`, kept as a reduced fraction of integer Laurent
/// polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with a nonzero
/// constant term and a positive leading coefficient, and numerator and
/// denominator have no common factor in `Z[q]`. Two values are equal iff
/// their canonical forms are structurally equal, so `PartialEq` is derived.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        QScalar {
            num: LaurentPoly::constant(BigInt::from(n)),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        QScalar {
            num: LaurentPoly::constant(n),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::from_parts(
            LaurentPoly::constant(r.numer().clone()),
            LaurentPoly::constant(r.denom().clone()),
        )
        .expect("rational denominators are nonzero")
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        QScalar {
            num: LaurentPoly::monomial(BigInt::one(), k),
            den: LaurentPoly::one(),
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^-1`.
    pub fn qbar() -> Self {
        Self::q_pow(-1)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        QScalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `num / den` brought to canonical form.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = num.low() - den.low();
        let n = poly_trim(num.coeffs().to_vec());
        let d = poly_trim(den.coeffs().to_vec());
        let g = poly_gcd(&n, &d);
        let mut n = poly_exact_div(&n, &g).expect("gcd divides numerator");
        let mut d = poly_exact_div(&d, &g).expect("gcd divides denominator");
        if d.last().is_some_and(Signed::is_negative) {
            n.iter_mut().for_each(|c| *c = -&*c);
            d.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok(QScalar {
            num: LaurentPoly::from_coeffs(shift, n),
            den: LaurentPoly::from_coeffs(0, d),
        })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value when it does not depend on `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        let constant = |p: &LaurentPoly| p.is_zero() || (p.low() == 0 && p.high() == 0);
        if !constant(&self.num) || !constant(&self.den) {
            return None;
        }
        Some(Rational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() || num.is_zero() {
                return QScalar {
                    num,
                    den: self.den.clone(),
                }
                .with_zero_fixed();
            }
            return Self::from_parts(num, self.den.clone()).expect("nonzero denominator");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::from_parts(num, self.den.mul(&other.den)).expect("nonzero denominator")
    }

    pub fn neg_ref(&self) -> Self {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return QScalar {
                num: self.num.mul(&other.num),
                den: LaurentPoly::one(),
            };
        }
        Self::from_parts(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::from_parts(self.den.clone(), self.num.clone())
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// `self^k` for any integer `k` (`k < 0` requires `self != 0`).
    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Ok(acc)
    }

    /// Substitutes the rational `q0` for `q`.
    pub fn eval(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        if q0.is_zero() {
            return Err(ScalarError::ZeroSubstitution);
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::Pole {
                at: q0.clone(),
                denominator: self.den.clone(),
            });
        }
        Ok(self.num.eval(q0) / d)
    }

    fn with_zero_fixed(self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            self
        }
    }

    /// True if the rendering is a single signed monomial (no `+`/`-` inside).
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_monomial()
    }

    /// Common denominator helper: `self = num / den` with both as Laurent
    /// polynomials.
    pub fn into_parts(self) -> (LaurentPoly, LaurentPoly) {
        (self.num, self.den)
    }

    /// The least common multiple (up to sign) of a set of denominators.
    pub fn lcm_denominator<'a>(values: impl IntoIterator<Item = &'a QScalar>) -> LaurentPoly {
        let mut acc: Vec<BigInt> = alloc::vec![BigInt::one()];
        for v in values {
            let d = poly_trim(v.den.coeffs().to_vec());
            let g = poly_gcd(&acc, &d);
            let part = poly_exact_div(&d, &g).expect("gcd divides");
            acc = LaurentPoly::from_coeffs(0, acc)
                .mul(&LaurentPoly::from_coeffs(0, part))
                .coeffs()
                .to_vec();
        }
        LaurentPoly::from_coeffs(0, acc)
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

fn wrap_poly(p: &LaurentPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

impl fmt::Display for QScalar {
    /// `num` alone for polynomials, otherwise `num / den` with multi-term
    /// parts parenthesized: `q / (q^2 - 1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        wrap_poly(&self.num, f)?;
        f.write_str(" / ")?;
        wrap_poly(&self.den, f)
    }
}

impl Add for QScalar {
    type Output = QScalar;
    fn add(self, rhs: QScalar) -> QScalar {
        self.add_ref(&rhs)
    }
}

impl Sub for QScalar {
    type Output = QScalar;
    fn sub(self, rhs: QScalar) -> QScalar {
        self.sub_ref(&rhs)
    }
}

impl Mul for QScalar {
    type Output = QScalar;
    fn mul(self, rhs: QScalar) -> QScalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        self.neg_ref()
    }
}

impl Div for QScalar {
    type Output = QScalar;
    /// Panics on division by zero; use [`QScalar::div_ref`] to handle it.
    fn div(self, rhs: QScalar) -> QScalar {
        self.div_ref(&rhs).expect("division by zero scalar")
    }
}

impl<'a> Add<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self.sub_ref(rhs)
    }
}

impl<'a> Mul<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        self.mul_ref(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q_minus_qbar() -> QScalar {
        QScalar::q().sub_ref(&QScalar::qbar())
    }

    #[test]
    fn self_division_is_one() {
        let x = q_minus_qbar();
        assert!(x.div_ref(&x).unwrap().is_one());
    }

    #[test]
    fn q_times_qbar_is_one() {
        assert!(QScalar::q().mul_ref(&QScalar::qbar()).is_one());
    }

    #[test]
    fn quotient_of_q_differences() {
        // oracle: q^2 - q^-2 = (q - q^-1)(q + q^-1)
        let num = QScalar::q_pow(2).sub_ref(&QScalar::q_pow(-2));
        let got = num.div_ref(&q_minus_qbar()).unwrap();
        assert_eq!(got, QScalar::q().add_ref(&QScalar::qbar()));
        assert!(got.is_polynomial());
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(
            QScalar::one().div_ref(&QScalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_denominator() {
        // 1/(q - q^-1) = q/(q^2 - 1)
        let x = q_minus_qbar().inv().unwrap();
        assert_eq!(x.to_string(), "q / (q^2 - 1)");
        // -2/(2 - 2q) = 1/(q - 1)
        let y = QScalar::from_parts(
            LaurentPoly::constant(BigInt::from(-2)),
            LaurentPoly::from_coeffs(0, alloc::vec![BigInt::from(2), BigInt::from(-2)]),
        )
        .unwrap();
        assert_eq!(y.to_string(), "1 / (q - 1)");
    }

    #[test]
    fn eval_examples() {
        let two = Rational::from_integer(2.into());
        let s = QScalar::q().add_ref(&QScalar::qbar());
        assert_eq!(s.eval(&two).unwrap(), Rational::new(5.into(), 2.into()));
        let third = Rational::new(1.into(), 3.into());
        assert_eq!(
            QScalar::q_pow(3).eval(&third).unwrap(),
            Rational::new(1.into(), 27.into())
        );
        let one = Rational::from_integer(1.into());
        assert!(q_minus_qbar().eval(&one).unwrap().is_zero());
        let pole = q_minus_qbar().inv().unwrap().eval(&one);
        assert!(matches!(pole, Err(ScalarError::Pole { .. })));
    }
}
