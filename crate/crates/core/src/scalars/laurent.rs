//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use super::Rational;

/// `sum_k c_k q^k`, stored densely from the lowest exponent.
///
/// Invariant: either `coeffs` is empty (the zero polynomial, `low == 0`) or
/// both the first and last coefficient are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// Builds `sum coeffs[i] q^(low + i)` and trims zeros at both ends.
    pub fn from_coeffs(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms `(exponent, coefficient)`, highest exponent first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn shifted(&self, by: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + i] += c;
        }
        Self::from_coeffs(low, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(self.low + other.low, coeffs)
    }

    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn eval(&self, q0: &Rational) -> Rational {
        // Horner on the dense part, then multiply by q0^low.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + Rational::from_integer(c.clone());
        }
        if self.low >= 0 {
            acc * q0.clone().pow(self.low as i32)
        } else {
            acc / q0.clone().pow((-self.low) as i32)
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// `c*q^k` terms, highest exponent first: `2*q^3 - q + 1 - q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (exp, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = abs.is_one();
            match exp {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    if exp == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// Dense polynomials over Z (index = exponent, no trailing zeros) used for gcd
// reduction of fractions.

pub(crate) fn poly_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn poly_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = poly_content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero), made primitive.
fn poly_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        r = poly_trim(r);
        r = poly_primitive(&r);
    }
    r
}

/// gcd in `Z[q]`, normalized to a positive leading coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    let content = poly_content(a).gcd(&poly_content(b));
    let (mut x, mut y) = (poly_primitive(a), poly_primitive(b));
    if x.len() < y.len() {
        core::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = poly_prem(&x, &y);
        x = y;
        y = r;
    }
    let g: Vec<BigInt> = x.iter().map(|c| c * &content).collect();
    normalize_sign(g)
}

fn normalize_sign(p: Vec<BigInt>) -> Vec<BigInt> {
    if p.last().is_some_and(Signed::is_negative) {
        p.into_iter().map(|c| -c).collect()
    } else {
        p
    }
}

/// Exact division in `Z[q]`; `None` if `b` does not divide `a`.
pub(crate) fn poly_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (qc, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= &qc * c;
        }
        quot[k] = qc;
    }
    if r.iter().all(Zero::is_zero) {
        Some(poly_trim(quot))
    } else {
        None
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low
            .cmp(&other.low)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}
