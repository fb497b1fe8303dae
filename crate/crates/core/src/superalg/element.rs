use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::letter::{Letter, Parity, Word};
use crate::scalars::{Coefficient, QScalar};

/// Parity of an element: homogeneous or mixed. The zero element is even.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementParity {
    Even,
    Odd,
    Mixed,
}

impl ElementParity {
    pub fn homogeneous(self) -> Option<Parity> {
        match self {
            ElementParity::Even => Some(Parity::Even),
            ElementParity::Odd => Some(Parity::Odd),
            ElementParity::Mixed => None,
        }
    }
}

/// The three brackets of a `Z2`-graded algebra, each with a weight `w`:
///
/// * `[x,y]_w  = xy - w yx`
/// * `{x,y}_w  = xy + w yx`
/// * `[[x,y]]_w = xy - (-1)^(deg x deg y) w yx`
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
    Super,
}

/// A finite sum of words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coefficient> Default for Element<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Element<C> {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn letter(l: Letter) -> Self {
        Self::term(Word::single(l), C::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, C::one())
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Element { terms }
    }

    /// Product of letters, in order.
    pub fn monomial(letters: &[Letter]) -> Self {
        Self::word(Word::new(letters.to_vec()))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, &c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Option<&C> {
        self.terms.get(w)
    }

    /// The greatest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Word, C)> {
        self.terms.pop_last()
    }

    /// Length of the longest word (0 for zero and scalars).
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, |w| w.len())
    }

    /// The constant term, if the element is a pure scalar (or zero).
    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = existing.plus(c);
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), &v.times(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &C::one());
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &C::one().negated());
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::one().negated())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v.times(c)))
                .collect(),
        }
    }

    /// Bilinear extension of concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                r.add_term(w1.concat(w2), &c1.times(c2));
            }
        }
        r
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, x| acc.mul(x))
    }

    pub fn parity(&self) -> ElementParity {
        let mut seen = (false, false);
        for w in self.terms.keys() {
            match w.parity() {
                Parity::Even => seen.0 = true,
                Parity::Odd => seen.1 = true,
            }
        }
        match seen {
            (_, false) => ElementParity::Even,
            (false, true) => ElementParity::Odd,
            (true, true) => ElementParity::Mixed,
        }
    }

    /// `(even part, odd part)`.
    pub fn homogeneous_parts(&self) -> (Self, Self) {
        let (mut even, mut odd) = (Self::zero(), Self::zero());
        for (w, c) in &self.terms {
            let target = if w.parity().is_odd() {
                &mut odd
            } else {
                &mut even
            };
            target.terms.insert(w.clone(), c.clone());
        }
        (even, odd)
    }

    /// Bracket of the given kind with weight `w`. The super bracket is applied
    /// per pair of homogeneous components.
    pub fn bracket(kind: BracketKind, x: &Self, y: &Self, w: &C) -> Self {
        match kind {
            BracketKind::Commutator => x.mul(y).sub(&y.mul(x).scale(w)),
            BracketKind::Anticommutator => x.mul(y).add(&y.mul(x).scale(w)),
            BracketKind::Super => {
                let (xe, xo) = x.homogeneous_parts();
                let (ye, yo) = y.homogeneous_parts();
                let mut r = Self::zero();
                for (xp, px) in [(&xe, Parity::Even), (&xo, Parity::Odd)] {
                    for (yp, py) in [(&ye, Parity::Even), (&yo, Parity::Odd)] {
                        if xp.is_zero() || yp.is_zero() {
                            continue;
                        }
                        let sign = C::from_int(px.sign_with(py));
                        r.add_scaled(&xp.mul(yp), &C::one());
                        r.add_scaled(&yp.mul(xp), &sign.times(w).negated());
                    }
                }
                r
            }
        }
    }

    /// `[[x, y]]` with weight 1.
    pub fn supercommutator(x: &Self, y: &Self) -> Self {
        Self::bracket(BracketKind::Super, x, y, &C::one())
    }

    pub fn map_coeffs<D: Coefficient, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
    ) -> Result<Element<D>, E> {
        let mut r = Element::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), &f(c)?);
        }
        Ok(r)
    }

    /// Replaces every letter by an element and expands.
    pub fn substitute<E>(&self, mut f: impl FnMut(&Letter) -> Result<Self, E>) -> Result<Self, E> {
        let mut cache: BTreeMap<Letter, Self> = BTreeMap::new();
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::scalar(c.clone());
            for l in w.iter() {
                if !cache.contains_key(l) {
                    cache.insert(*l, f(l)?);
                }
                acc = acc.mul(&cache[l]);
            }
            r.add_scaled(&acc, &C::one());
        }
        Ok(r)
    }

    /// All letters occurring in the element.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = self.terms.keys().flat_map(|w| w.iter().copied()).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl<C: Coefficient> fmt::Display for Element<C> {
    /// Terms in ascending word order: `e1*f1 - q^2*f1*e1 + (q / (q^2 - 1))*k1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let t = render_term(w, c);
            match (i, t.strip_prefix('-')) {
                (0, _) => f.write_str(&t)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}

fn render_term<C: Coefficient>(w: &Word, c: &C) -> String {
    if w.is_empty() {
        return c.render_factor();
    }
    if c.is_one() {
        return alloc::format!("{w}");
    }
    if c.negated().is_one() {
        return alloc::format!("-{w}");
    }
    alloc::format!("{}*{w}", c.render_factor())
}

impl Element<QScalar> {
    /// Leading term first, with a common denominator pulled out:
    /// `(k1 - kb1)/(q - q^-1)` when every coefficient is a rational multiple
    /// of one whose inverse is a Laurent polynomial, otherwise
    /// `(q*k1 - q*kb1)/(q^2 - 1)`. Plain when no denominator is needed.
    pub fn render_factored(&self) -> String {
        let Some((_, lead)) = self.leading() else {
            return "0".into();
        };
        let inv = lead.inv().expect("nonzero coefficient");
        let proportional = self
            .terms
            .values()
            .all(|c| c.mul_ref(&inv).as_rational().is_some());
        if !lead.is_polynomial() && inv.is_polynomial() && proportional {
            return alloc::format!("({})/({inv})", self.scale(&inv).render_descending());
        }
        let den = QScalar::lcm_denominator(self.terms.values());
        if den.is_one() {
            return self.render_descending();
        }
        let inner = self.scale(&QScalar::from_poly(den.clone()));
        alloc::format!("({})/({den})", inner.render_descending())
    }

    fn render_descending(&self) -> String {
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let t = render_term(w, c);
            match (i, t.strip_prefix('-')) {
                (0, _) => out.push_str(&t),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (_, None) => {
                    out.push_str(" + ");
                    out.push_str(&t);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;
    use crate::superalg::LetterKind;
    use alloc::string::ToString;

    fn odd(i: u16) -> Letter {
        Letter::abstract_letter(i, Parity::Odd)
    }
    fn even(i: u16) -> Letter {
        Letter::abstract_letter(i, Parity::Even)
    }
    type El = Element<QScalar>;

    #[test]
    fn unit_and_concatenation() {
        let e1 = El::letter(Letter::new(LetterKind::E, 1, Parity::Odd));
        let f2 = El::letter(Letter::new(LetterKind::F, 2, Parity::Even));
        assert_eq!(El::one().mul(&e1), e1);
        let p = e1.mul(&f2);
        assert_eq!(p.len(), 1);
        assert_eq!(p.to_string(), "e1*f2");
        assert_eq!(p.parity(), ElementParity::Odd);
    }

    #[test]
    fn bilinearity() {
        let e1 = El::letter(Letter::new(LetterKind::E, 1, Parity::Odd));
        let f1 = El::letter(Letter::new(LetterKind::F, 1, Parity::Odd));
        let x = e1.scale(&QScalar::q()).add(&f1);
        let got = x.mul(&e1);
        let want = e1.mul(&e1).scale(&QScalar::q()).add(&f1.mul(&e1));
        assert_eq!(got, want);
    }

    #[test]
    fn parity_reports() {
        let k1 = El::letter(Letter::new(LetterKind::K, 1, Parity::Even));
        let k2 = El::letter(Letter::new(LetterKind::K, 2, Parity::Even));
        let em = El::letter(Letter::new(LetterKind::E, 1, Parity::Odd));
        assert_eq!(em.parity(), ElementParity::Odd);
        assert_eq!(k1.mul(&k2).parity(), ElementParity::Even);
        assert_eq!(em.add(&k1).parity(), ElementParity::Mixed);
        assert_eq!(El::zero().parity(), ElementParity::Even);
    }

    #[test]
    fn bracket_signs() {
        let x = El::letter(even(1));
        let y = El::letter(even(2));
        let a = El::letter(odd(1));
        let b = El::letter(odd(2));
        let one = QScalar::one();
        let comm = El::bracket(BracketKind::Commutator, &x, &y, &one);
        assert_eq!(comm, x.mul(&y).sub(&y.mul(&x)));
        let sup = El::bracket(BracketKind::Super, &a, &b, &one);
        assert_eq!(sup, a.mul(&b).add(&b.mul(&a)));
        let sup_even = El::bracket(BracketKind::Super, &x, &b, &one);
        assert_eq!(sup_even, comm_of(&x, &b));
        // inhomogeneous first argument is split by parity
        let mixed = x.add(&a);
        let got = El::bracket(BracketKind::Super, &mixed, &b, &one);
        let want = El::supercommutator(&x, &b).add(&El::supercommutator(&a, &b));
        assert_eq!(got, want);
    }

    fn comm_of(x: &El, y: &El) -> El {
        x.mul(y).sub(&y.mul(x))
    }

    #[test]
    fn factored_rendering() {
        let k1 = El::letter(Letter::new(LetterKind::K, 1, Parity::Even));
        let kb1 = El::letter(Letter::new(LetterKind::KBar, 1, Parity::Even));
        let c = QScalar::q().sub_ref(&QScalar::qbar()).inv().unwrap();
        let x = k1.sub(&kb1).scale(&c);
        assert_eq!(x.render_factored(), "(k1 - kb1)/(q - q^-1)");
        let y = x.add(&El::letter(Letter::new(LetterKind::E, 1, Parity::Odd)));
        assert_eq!(
            y.render_factored(),
            "((q^2 - 1)*e1 + q*k1 - q*kb1)/(q^2 - 1)"
        );
        assert_eq!(x.to_string(), "(-q / (q^2 - 1))*kb1 + (q / (q^2 - 1))*k1");
    }

    #[test]
    fn map_to_rationals() {
        let k1 = El::letter(Letter::new(LetterKind::K, 1, Parity::Even));
        let x = k1.scale(&QScalar::q_pow(2));
        let two = Rational::from_integer(2.into());
        let y: Element<Rational> = x.map_coeffs(|c| c.eval(&two)).unwrap();
        assert_eq!(y.to_string(), "4*k1");
    }
}
