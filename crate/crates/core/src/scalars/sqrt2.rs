use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// `a + b*sqrt(2)` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sqrt2Scalar {
    pub a: Rational,
    pub b: Rational,
}

impl Sqrt2Scalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Sqrt2Scalar { a, b }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    pub fn sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// `(sqrt 2)^k` for any integer `k`.
    pub fn sqrt2_pow(k: i32) -> Self {
        let two = Rational::from_integer(2.into());
        let half = k.unsigned_abs() / 2;
        let mut r = Rational::one();
        for _ in 0..half {
            r *= &two;
        }
        if k < 0 {
            r = r.recip();
        }
        if k.unsigned_abs() % 2 == 1 {
            // sqrt2^-1 = sqrt2 / 2
            let b = if k < 0 { r / &two } else { r };
            Self::new(Rational::zero(), b)
        } else {
            Self::from_rational(r)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a - b*sqrt(2)`.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// `a^2 - 2 b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // sqrt 2 is irrational, so the norm of a nonzero element is nonzero.
        let n = self.norm();
        let c = self.conj();
        Some(Self::new(c.a / &n, c.b / &n))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.a * r, &self.b * r)
    }
}

impl Add for &Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn add(self, o: &Sqrt2Scalar) -> Sqrt2Scalar {
        Sqrt2Scalar::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn sub(self, o: &Sqrt2Scalar) -> Sqrt2Scalar {
        Sqrt2Scalar::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn mul(self, o: &Sqrt2Scalar) -> Sqrt2Scalar {
        let two = Rational::from_integer(2.into());
        Sqrt2Scalar::new(
            &self.a * &o.a + two * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for &Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn neg(self) -> Sqrt2Scalar {
        Sqrt2Scalar::new(-self.a.clone(), -self.b.clone())
    }
}

impl Add for Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn add(self, o: Sqrt2Scalar) -> Sqrt2Scalar {
        &self + &o
    }
}

impl Sub for Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn sub(self, o: Sqrt2Scalar) -> Sqrt2Scalar {
        &self - &o
    }
}

impl Mul for Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn mul(self, o: Sqrt2Scalar) -> Sqrt2Scalar {
        &self * &o
    }
}

impl Neg for Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn neg(self) -> Sqrt2Scalar {
        -&self
    }
}

impl fmt::Display for Sqrt2Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}*sqrt2", self.a, sign, self.b.abs())
            }
        }
    }
}
