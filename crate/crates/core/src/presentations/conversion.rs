//! Green generators in terms of Chevalley generators and back.
//!
//! Both directions involve `sqrt 2`. Every formula is homogeneous in it, so
//! values are carried as `sqrt2^e * body` with `body` over `Q(q)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::chevalley::gen;
use super::signature::{AlgebraSignature, Sign};
use crate::dsl::{bind, pretty, Expr};
use crate::scalars::QScalar;
use crate::superalg::{BracketKind, Element, Letter, LetterKind};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConversionError {
    #[error("sum of terms with sqrt2 exponents {0} and {1} is not homogeneous in sqrt2")]
    MixedSqrt2(i32, i32),
    #[error("{0} has no expression in the requested generators")]
    NoImage(String),
}

/// `sqrt2^sqrt2_exp * body`. The zero value has exponent 0.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledElement {
    pub sqrt2_exp: i32,
    pub body: Element<QScalar>,
}

fn two_pow(k: u32) -> QScalar {
    QScalar::from_bigint(BigInt::from(2u8).pow(k))
}

impl ScaledElement {
    pub fn new(sqrt2_exp: i32, body: Element<QScalar>) -> Self {
        if body.is_zero() {
            return Self::zero();
        }
        ScaledElement { sqrt2_exp, body }
    }

    pub fn plain(body: Element<QScalar>) -> Self {
        Self::new(0, body)
    }

    pub fn zero() -> Self {
        ScaledElement {
            sqrt2_exp: 0,
            body: Element::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Rewrites with exponent `e`, which must have the same parity and not
    /// exceed the current one.
    fn lowered_to(&self, e: i32) -> Self {
        let diff = self.sqrt2_exp - e;
        debug_assert!(diff >= 0 && diff % 2 == 0);
        ScaledElement {
            sqrt2_exp: e,
            body: self.body.scale(&two_pow((diff / 2) as u32)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ConversionError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if (self.sqrt2_exp - other.sqrt2_exp) % 2 != 0 {
            return Err(ConversionError::MixedSqrt2(self.sqrt2_exp, other.sqrt2_exp));
        }
        let e = self.sqrt2_exp.min(other.sqrt2_exp);
        let body = self.lowered_to(e).body.add(&other.lowered_to(e).body);
        Ok(Self::new(e, body))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ConversionError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ScaledElement {
            sqrt2_exp: self.sqrt2_exp,
            body: self.body.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.sqrt2_exp + other.sqrt2_exp, self.body.mul(&other.body))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        Self::new(self.sqrt2_exp, self.body.scale(c))
    }

    pub fn bracket(kind: BracketKind, x: &Self, y: &Self, w: &QScalar) -> Self {
        Self::new(
            x.sqrt2_exp + y.sqrt2_exp,
            Element::bracket(kind, &x.body, &y.body, w),
        )
    }

    /// Exponent shifted into `[0, 1]` by absorbing powers of two into the
    /// body; the result is unique for a given value.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let e = self.sqrt2_exp.rem_euclid(2);
        let k = (self.sqrt2_exp - e) / 2;
        let c = if k >= 0 {
            two_pow(k as u32)
        } else {
            two_pow((-k) as u32).inv().expect("nonzero")
        };
        ScaledElement {
            sqrt2_exp: e,
            body: self.body.scale(&c),
        }
    }
}

impl fmt::Display for ScaledElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sqrt2_exp {
            0 => write!(f, "{}", self.body),
            1 => write!(f, "sqrt2*({})", self.body),
            e => write!(f, "sqrt2^{e}*({})", self.body),
        }
    }
}

/// Substitutes every letter of `x` by a scaled element.
pub fn substitute_scaled(
    x: &Element<QScalar>,
    mut image: impl FnMut(&Letter) -> Result<ScaledElement, ConversionError>,
) -> Result<ScaledElement, ConversionError> {
    let mut acc = ScaledElement::zero();
    for (w, c) in x.terms() {
        let mut t = ScaledElement::plain(Element::scalar(c.clone()));
        for l in w.iter() {
            t = t.mul(&image(l)?);
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

/// A conversion formula as written: `sqrt2^sqrt2_exp * expr`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledExpr {
    pub sqrt2_exp: i32,
    pub expr: Expr,
}

impl ScaledExpr {
    pub fn bind(&self, sig: &AlgebraSignature) -> ScaledElement {
        let body = bind(sig, &self.expr).expect("conversion formulas use in-range generators");
        ScaledElement::new(self.sqrt2_exp, body)
    }
}

impl fmt::Display for ScaledExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = pretty(&self.expr);
        match self.sqrt2_exp {
            0 => f.write_str(&body),
            1 => write!(f, "sqrt2*({body})"),
            e => write!(f, "sqrt2^{e}*({body})"),
        }
    }
}

/// Bracket weight `q_t` (deformed): `qb` for `t <= m - 1`, `q` for `t >= m`,
/// as an exponent of `q`. The same rule extends to `t = 0`, giving `qb`.
pub fn q_index_exponent(sig: &AlgebraSignature, t: u16) -> i64 {
    if t < sig.m() {
        -1
    } else {
        1
    }
}

/// `a_i^-` (nested brackets of `e_i..e_N`) or `a_i^+` (of `f_N..f_i`).
pub fn green_from_chevalley(
    sig: &AlgebraSignature,
    i: u16,
    sign: Sign,
    deformed: bool,
) -> ScaledExpr {
    let n = sig.rank();
    assert!(sig.contains(i), "index {i} out of range");
    let (m, gi) = (i64::from(sig.m()), sig.grading(i).is_odd());
    let w = |t: u16, flip: bool| {
        if deformed {
            let k = q_index_exponent(sig, t);
            if flip {
                -k
            } else {
                k
            }
        } else {
            0
        }
    };
    let expr = match sign {
        Sign::Minus => {
            let mut r = gen(LetterKind::E, n);
            for t in (i..n).rev() {
                r = Expr::comm_w(gen(LetterKind::E, t), r, w(t, false));
            }
            let odd_sign = gi && (m - i64::from(i)) % 2 != 0;
            if odd_sign {
                -r
            } else {
                r
            }
        }
        Sign::Plus if deformed => {
            let mut r = gen(LetterKind::F, n);
            for t in (i..n).rev() {
                r = Expr::comm_w(r, gen(LetterKind::F, t), w(t, true));
            }
            if (n - i + 1) % 2 == 1 {
                -r
            } else {
                r
            }
        }
        Sign::Plus => {
            let mut r = gen(LetterKind::F, n);
            for t in (i..n).rev() {
                r = Expr::comm(gen(LetterKind::F, t), r);
            }
            -r
        }
    };
    ScaledExpr { sqrt2_exp: 1, expr }
}

/// `L_i = k_i k_{i+1} ... k_N`, or its inverse `kb_N ... kb_i`.
pub fn l_from_chevalley(sig: &AlgebraSignature, i: u16, bar: bool) -> Expr {
    let n = sig.rank();
    let factors: Vec<Expr> = if bar {
        (i..=n).rev().map(|t| gen(LetterKind::KBar, t)).collect()
    } else {
        (i..=n).map(|t| gen(LetterKind::K, t)).collect()
    };
    Expr::product(factors)
}

/// Chevalley generators in terms of Green generators: `h` (classical),
/// `k`, `kb` (deformed), `e`, `f`.
pub fn chevalley_from_green(
    sig: &AlgebraSignature,
    kind: LetterKind,
    i: u16,
    deformed: bool,
) -> Result<ScaledExpr, ConversionError> {
    use LetterKind::{KBar, LBar, E, F, H, K, L};
    let n = sig.rank();
    let am = |t| gen(LetterKind::AMinus, t);
    let ap = |t| gen(LetterKind::APlus, t);
    let half = |x: Expr| x.over(Expr::int(2));
    let no_image = || ConversionError::NoImage(format!("{}{i}", kind.prefix()));
    let top = i == n;
    let scaled = |sqrt2_exp, expr| Ok(ScaledExpr { sqrt2_exp, expr });
    match (kind, deformed) {
        (H, false) if top => scaled(0, half(-Expr::sup(am(n), ap(n)))),
        (H, false) => scaled(
            0,
            half(Expr::sup(am(i + 1), ap(i + 1))).minus(half(Expr::sup(am(i), ap(i)))),
        ),
        (K, true) if top => scaled(0, gen(L, n)),
        (K, true) => scaled(0, gen(L, i).times(gen(LBar, i + 1))),
        (KBar, true) if top => scaled(0, gen(LBar, n)),
        (KBar, true) => scaled(0, gen(LBar, i).times(gen(L, i + 1))),
        (E, _) if top => scaled(-1, am(n)),
        (F, _) if top => scaled(-1, -ap(n)),
        (E, true) => scaled(0, half(gen(LBar, i + 1).times(Expr::sup(am(i), ap(i + 1))))),
        (F, true) => scaled(0, half(Expr::sup(ap(i), am(i + 1)).times(gen(L, i + 1)))),
        (E, false) => scaled(0, half(Expr::sup(am(i), ap(i + 1)))),
        (F, false) => scaled(0, half(Expr::sup(ap(i), am(i + 1)))),
        _ => Err(no_image()),
    }
}

/// The image of a Green-side letter (`a_i^±`, `L_i`, `Lb_i`) in Chevalley
/// generators; other letters map to themselves.
pub fn green_image(
    sig: &AlgebraSignature,
    deformed: bool,
) -> impl Fn(&Letter) -> Result<ScaledElement, ConversionError> + '_ {
    move |l: &Letter| {
        let bound = |e: Expr| ScaledElement::plain(bind(sig, &e).expect("in range"));
        Ok(match l.kind {
            LetterKind::AMinus => {
                green_from_chevalley(sig, l.index, Sign::Minus, deformed).bind(sig)
            }
            LetterKind::APlus => green_from_chevalley(sig, l.index, Sign::Plus, deformed).bind(sig),
            LetterKind::L if deformed => bound(l_from_chevalley(sig, l.index, false)),
            LetterKind::LBar if deformed => bound(l_from_chevalley(sig, l.index, true)),
            LetterKind::L | LetterKind::LBar => {
                return Err(ConversionError::NoImage(format!("{l}")));
            }
            _ => ScaledElement::plain(Element::letter(*l)),
        })
    }
}

/// The image of a Chevalley letter in Green generators; other letters map
/// to themselves.
pub fn chevalley_image(
    sig: &AlgebraSignature,
    deformed: bool,
) -> impl Fn(&Letter) -> Result<ScaledElement, ConversionError> + '_ {
    move |l: &Letter| match l.kind {
        LetterKind::E | LetterKind::F | LetterKind::H | LetterKind::K | LetterKind::KBar => {
            Ok(chevalley_from_green(sig, l.kind, l.index, deformed)?.bind(sig))
        }
        _ => Ok(ScaledElement::plain(Element::letter(*l))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn top_generators() {
        let s = AlgebraSignature::new(1, 1).unwrap();
        assert_eq!(
            green_from_chevalley(&s, 2, Sign::Minus, true).to_string(),
            "sqrt2*(e2)"
        );
        assert_eq!(
            green_from_chevalley(&s, 2, Sign::Plus, true).to_string(),
            "sqrt2*(-f2)"
        );
        assert_eq!(
            chevalley_from_green(&s, LetterKind::E, 2, true)
                .unwrap()
                .to_string(),
            "sqrt2^-1*(a-2)"
        );
        assert_eq!(
            chevalley_from_green(&s, LetterKind::K, 2, true)
                .unwrap()
                .to_string(),
            "L2"
        );
        assert_eq!(
            chevalley_from_green(&s, LetterKind::H, 2, false)
                .unwrap()
                .to_string(),
            "-[[a-2, a+2]]/2"
        );
    }

    #[test]
    fn one_level_unrolled() {
        let s = AlgebraSignature::new(1, 1).unwrap();
        let a = green_from_chevalley(&s, 1, Sign::Minus, true);
        assert_eq!(a.to_string(), "sqrt2*([e1, e2]_q)");
        let x = a.bind(&s);
        assert_eq!(x.body.to_string(), "e1*e2 - q*e2*e1");
    }

    #[test]
    fn homogeneity_is_enforced() {
        let one = ScaledElement::plain(Element::one());
        let r2 = ScaledElement::new(1, Element::one());
        assert_eq!(one.add(&r2), Err(ConversionError::MixedSqrt2(0, 1)));
        let two = r2.mul(&r2);
        assert_eq!(two.sqrt2_exp, 2);
        let three = two.add(&one).unwrap();
        assert_eq!(
            three,
            ScaledElement::plain(Element::scalar(QScalar::from_int(3)))
        );
    }
}
