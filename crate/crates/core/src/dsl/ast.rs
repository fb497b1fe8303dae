use alloc::boxed::Box;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::superalg::{BracketKind, LetterKind, Parity};

/// A generator reference as written: kind and index. Abstract letters carry
/// their parity (`x<i>` even, `y<i>` odd); all other parities come from the
/// algebra signature at bind time.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenRef {
    pub kind: LetterKind,
    pub index: u16,
    pub abstract_parity: Parity,
}

impl GenRef {
    pub fn new(kind: LetterKind, index: u16) -> Self {
        GenRef {
            kind,
            index,
            abstract_parity: Parity::Even,
        }
    }

    pub fn abstract_letter(index: u16, parity: Parity) -> Self {
        GenRef {
            kind: LetterKind::Abstract,
            index,
            abstract_parity: parity,
        }
    }
}

/// Scalar literals: nonnegative integers and powers of `q` (`q`, `qb`,
/// `q^k`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScalarLit {
    Int(BigInt),
    QPow(i64),
}

/// Bracket weight. `One` is the unwritten default.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Weight {
    One,
    QPow(i64),
    Scalar(Box<Expr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Gen(GenRef),
    Scalar(ScalarLit),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division by a scalar-valued expression.
    Div(Box<Expr>, Box<Expr>),
    Bracket {
        kind: BracketKind,
        left: Box<Expr>,
        right: Box<Expr>,
        weight: Weight,
    },
}

// Constructors used by code that builds relations programmatically.
impl Expr {
    pub fn gen(kind: LetterKind, index: u16) -> Expr {
        Expr::Gen(GenRef::new(kind, index))
    }

    pub fn int(n: i64) -> Expr {
        if n < 0 {
            Expr::Neg(Box::new(Expr::Scalar(ScalarLit::Int(BigInt::from(-n)))))
        } else {
            Expr::Scalar(ScalarLit::Int(BigInt::from(n)))
        }
    }

    pub fn q_pow(k: i64) -> Expr {
        Expr::Scalar(ScalarLit::QPow(k))
    }

    pub fn plus(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }

    pub fn minus(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }

    pub fn times(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }

    pub fn over(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }

    /// `c * self`, folding the trivial cases `c = 1` and `c = -1`.
    pub fn scaled_by(self, c: i64) -> Expr {
        match c {
            1 => self,
            -1 => -self,
            _ => Expr::int(c).times(self),
        }
    }

    pub fn bracket(kind: BracketKind, left: Expr, right: Expr, weight: Weight) -> Expr {
        Expr::Bracket {
            kind,
            left: Box::new(left),
            right: Box::new(right),
            weight,
        }
    }

    pub fn comm(left: Expr, right: Expr) -> Expr {
        Self::bracket(BracketKind::Commutator, left, right, Weight::One)
    }

    pub fn comm_w(left: Expr, right: Expr, q_exp: i64) -> Expr {
        Self::bracket(BracketKind::Commutator, left, right, Weight::q_pow(q_exp))
    }

    pub fn anti(left: Expr, right: Expr) -> Expr {
        Self::bracket(BracketKind::Anticommutator, left, right, Weight::One)
    }

    pub fn sup(left: Expr, right: Expr) -> Expr {
        Self::bracket(BracketKind::Super, left, right, Weight::One)
    }

    pub fn sup_w(left: Expr, right: Expr, q_exp: i64) -> Expr {
        Self::bracket(BracketKind::Super, left, right, Weight::q_pow(q_exp))
    }

    /// `c_1*x_1 + c_2*x_2 + ...`, merging equal terms and dropping zero
    /// coefficients; `0` when nothing is left.
    pub fn linear_combination(terms: Vec<(i64, Expr)>) -> Expr {
        let mut merged: Vec<(i64, Expr)> = Vec::new();
        for (c, x) in terms {
            match merged.iter_mut().find(|(_, y)| *y == x) {
                Some(slot) => slot.0 += c,
                None => merged.push((c, x)),
            }
        }
        let mut acc: Option<Expr> = None;
        for (c, x) in merged {
            if c == 0 {
                continue;
            }
            acc = Some(match acc {
                None => x.scaled_by(c),
                Some(prev) if c < 0 => prev.minus(x.scaled_by(-c)),
                Some(prev) => prev.plus(x.scaled_by(c)),
            });
        }
        acc.unwrap_or_else(|| Expr::int(0))
    }

    /// Left-folded product of the factors (`1` when empty).
    pub fn product(factors: Vec<Expr>) -> Expr {
        let mut it = factors.into_iter();
        match it.next() {
            None => Expr::int(1),
            Some(first) => it.fold(first, Expr::times),
        }
    }
}

impl Weight {
    /// `q^k`, with `k = 0` meaning the default weight.
    pub fn q_pow(k: i64) -> Weight {
        if k == 0 {
            Weight::One
        } else {
            Weight::QPow(k)
        }
    }
}

impl core::ops::Neg for Expr {
    type Output = Expr;

    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}
