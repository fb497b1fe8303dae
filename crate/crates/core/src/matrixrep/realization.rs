use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::matrix::{ExactMatrix, Labels};
use crate::dsl::{pretty, Expr, GenRef, ScalarLit, Weight};
use crate::presentations::{AlgebraSignature, Sign};
use crate::scalars::{Rational, Sqrt2Scalar};
use crate::superalg::{BracketKind, LetterKind};

/// Largest matrix size accepted by the classical checks.
pub const MAX_DIM: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix size {dim} exceeds {MAX_DIM}; choose smaller m, n")]
    TooLarge { dim: usize },
    #[error("generator {0} has no matrix in the classical realization")]
    NoMatrix(String),
    #[error("q has no value in the classical realization (in `{0}`)")]
    Deformed(String),
    #[error("divisor `{0}` is not a nonzero scalar")]
    BadDivisor(String),
    #[error("bracket weight `{0}` is not a scalar")]
    BadWeight(String),
}

/// The defining matrices of the generators.
#[derive(Clone, Debug)]
pub struct Realization {
    sig: AlgebraSignature,
    labels: Labels,
    green: BTreeMap<(u16, Sign), ExactMatrix>,
    chevalley: BTreeMap<(LetterKind, u16), ExactMatrix>,
}

/// Value of a subexpression: a scalar (times the identity) or a matrix.
#[derive(Clone, Debug)]
enum Value {
    Scalar(Sqrt2Scalar),
    Matrix(ExactMatrix),
}

fn sqrt2() -> Sqrt2Scalar {
    Sqrt2Scalar::sqrt2()
}

fn half() -> Sqrt2Scalar {
    Sqrt2Scalar::from_rational(Rational::new(BigInt::from(1), BigInt::from(2)))
}

/// `a_i^±` as a matrix: for `i <= m` the odd `B_i^±`, above the even
/// `F_{i-m}^±`.
pub fn basis_matrix(sig: &AlgebraSignature, i: u16, sign: Sign) -> ExactMatrix {
    let labels = Labels {
        m: sig.m(),
        n: sig.n(),
    };
    let (m, n) = (i32::from(sig.m()), i32::from(sig.n()));
    let i = i32::from(i);
    let e = |r, c| ExactMatrix::unit(labels, r, c);
    let x = if i <= m {
        match sign {
            Sign::Minus => e(0, i).sub(&e(i + m, 0)),
            Sign::Plus => e(0, i + m).add(&e(i, 0)),
        }
    } else {
        let j = i - m;
        match sign {
            Sign::Minus => e(-j, 0).sub(&e(0, -j - n)),
            Sign::Plus => e(0, -j).sub(&e(-j - n, 0)),
        }
    };
    x.scale(&sqrt2())
}

impl Realization {
    pub fn new(sig: &AlgebraSignature) -> Result<Self, MatrixError> {
        let labels = Labels {
            m: sig.m(),
            n: sig.n(),
        };
        if labels.dim() > MAX_DIM {
            return Err(MatrixError::TooLarge { dim: labels.dim() });
        }
        let mut green = BTreeMap::new();
        for i in 1..=sig.rank() {
            for s in Sign::BOTH {
                green.insert((i, s), basis_matrix(sig, i, s));
            }
        }
        let mut r = Realization {
            sig: *sig,
            labels,
            green,
            chevalley: BTreeMap::new(),
        };
        r.chevalley = r.chevalley_matrices();
        Ok(r)
    }

    pub fn labels(&self) -> Labels {
        self.labels
    }

    pub fn signature(&self) -> &AlgebraSignature {
        &self.sig
    }

    pub fn green(&self, i: u16, s: Sign) -> &ExactMatrix {
        &self.green[&(i, s)]
    }

    /// `h_i`, `e_i`, `f_i` expressed through the Green matrices.
    fn chevalley_matrices(&self) -> BTreeMap<(LetterKind, u16), ExactMatrix> {
        let n = self.sig.rank();
        let sc = ExactMatrix::supercommutator;
        let am = |i| self.green(i, Sign::Minus);
        let ap = |i| self.green(i, Sign::Plus);
        let mut out = BTreeMap::new();
        for i in 1..n {
            let h = sc(am(i + 1), ap(i + 1))
                .sub(&sc(am(i), ap(i)))
                .scale(&half());
            out.insert((LetterKind::H, i), h);
            out.insert((LetterKind::E, i), sc(am(i), ap(i + 1)).scale(&half()));
            out.insert((LetterKind::F, i), sc(ap(i), am(i + 1)).scale(&half()));
        }
        let inv_sqrt2 = Sqrt2Scalar::sqrt2_pow(-1);
        out.insert((LetterKind::H, n), sc(am(n), ap(n)).scale(&half()).neg());
        out.insert((LetterKind::E, n), am(n).scale(&inv_sqrt2));
        out.insert((LetterKind::F, n), ap(n).scale(&inv_sqrt2).neg());
        out
    }

    pub fn generator(&self, g: &GenRef) -> Result<&ExactMatrix, MatrixError> {
        let missing = || MatrixError::NoMatrix(format!("{g}"));
        match g.kind {
            LetterKind::AMinus => self.green.get(&(g.index, Sign::Minus)).ok_or_else(missing),
            LetterKind::APlus => self.green.get(&(g.index, Sign::Plus)).ok_or_else(missing),
            kind => self.chevalley.get(&(kind, g.index)).ok_or_else(missing),
        }
    }

    /// Evaluates an expression; scalars become multiples of the identity.
    pub fn evaluate(&self, e: &Expr) -> Result<ExactMatrix, MatrixError> {
        Ok(match self.value(e)? {
            Value::Scalar(s) => ExactMatrix::identity(self.labels).scale(&s),
            Value::Matrix(x) => x,
        })
    }

    fn scalar_of(&self, e: &Expr) -> Option<Sqrt2Scalar> {
        match self.value(e).ok()? {
            Value::Scalar(s) => Some(s),
            Value::Matrix(_) => None,
        }
    }

    fn value(&self, e: &Expr) -> Result<Value, MatrixError> {
        use Value::{Matrix, Scalar};
        Ok(match e {
            Expr::Gen(g) => Matrix(self.generator(g)?.clone()),
            Expr::Scalar(ScalarLit::Int(n)) => Scalar(Sqrt2Scalar::from_rational(
                Rational::from_integer(n.clone()),
            )),
            Expr::Scalar(ScalarLit::QPow(0)) => Scalar(Sqrt2Scalar::one()),
            Expr::Scalar(ScalarLit::QPow(_)) => return Err(MatrixError::Deformed(pretty(e))),
            Expr::Neg(x) => match self.value(x)? {
                Scalar(s) => Scalar(-s),
                Matrix(m) => Matrix(m.neg()),
            },
            Expr::Add(l, r) => self.combine(self.value(l)?, self.value(r)?, false),
            Expr::Sub(l, r) => self.combine(self.value(l)?, self.value(r)?, true),
            Expr::Mul(l, r) => match (self.value(l)?, self.value(r)?) {
                (Scalar(a), Scalar(b)) => Scalar(a * b),
                (Scalar(a), Matrix(x)) | (Matrix(x), Scalar(a)) => Matrix(x.scale(&a)),
                (Matrix(x), Matrix(y)) => Matrix(x.mul(&y)),
            },
            Expr::Div(l, r) => {
                let d = self
                    .scalar_of(r)
                    .and_then(|s| s.inv())
                    .ok_or_else(|| MatrixError::BadDivisor(pretty(r)))?;
                match self.value(l)? {
                    Scalar(a) => Scalar(a * d),
                    Matrix(x) => Matrix(x.scale(&d)),
                }
            }
            Expr::Bracket {
                kind,
                left,
                right,
                weight,
            } => {
                let w = match weight {
                    Weight::One | Weight::QPow(0) => Sqrt2Scalar::one(),
                    Weight::QPow(_) => return Err(MatrixError::Deformed(pretty(e))),
                    Weight::Scalar(x) => self
                        .scalar_of(x)
                        .ok_or_else(|| MatrixError::BadWeight(pretty(x)))?,
                };
                let x = self.evaluate(left)?;
                let y = self.evaluate(right)?;
                Matrix(bracket(*kind, &x, &y, &w))
            }
        })
    }

    fn combine(&self, a: Value, b: Value, subtract: bool) -> Value {
        use Value::{Matrix, Scalar};
        match (a, b) {
            (Scalar(x), Scalar(y)) => Scalar(if subtract { x - y } else { x + y }),
            (a, b) => {
                let to_m = |v: Value| match v {
                    Scalar(s) => ExactMatrix::identity(self.labels).scale(&s),
                    Matrix(m) => m,
                };
                let (x, y) = (to_m(a), to_m(b));
                Matrix(if subtract { x.sub(&y) } else { x.add(&y) })
            }
        }
    }
}

/// `[x,y]_w`, `{x,y}_w`, `[[x,y]]_w` on matrices; the super bracket is split
/// over the homogeneous block parts.
pub fn bracket(
    kind: BracketKind,
    x: &ExactMatrix,
    y: &ExactMatrix,
    w: &Sqrt2Scalar,
) -> ExactMatrix {
    match kind {
        BracketKind::Commutator => x.mul(y).sub(&y.mul(x).scale(w)),
        BracketKind::Anticommutator => x.mul(y).add(&y.mul(x).scale(w)),
        BracketKind::Super => ExactMatrix::super_bracket(x, y, w),
    }
}

/// Every Green matrix in index order, `a_1^-, a_1^+, a_2^-, ...`.
pub fn green_basis(r: &Realization) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for i in 1..=r.signature().rank() {
        for s in [Sign::Minus, Sign::Plus] {
            out.push(r.green(i, s).clone());
        }
    }
    out
}
