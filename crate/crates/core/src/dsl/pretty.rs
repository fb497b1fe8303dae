//! Canonical rendering. Parentheses are emitted only where the parser
//! would otherwise build a different tree, so `parse(pretty(e)) == e`.

use alloc::string::String;
use core::fmt::{self, Write};

use super::ast::{Expr, GenRef, ScalarLit, Weight};
use crate::superalg::{BracketKind, LetterKind, Parity};

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const ATOM: u8 = 4;

pub fn pretty(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(&mut out, e, SUM).expect("writing to a String");
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_expr(&mut out, self, SUM)?;
        f.write_str(&out)
    }
}

impl fmt::Display for GenRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.abstract_parity) {
            (LetterKind::Abstract, Parity::Odd) => write!(f, "y{}", self.index),
            (kind, _) => write!(f, "{}{}", kind.prefix(), self.index),
        }
    }
}

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => SUM,
        Expr::Mul(..) | Expr::Div(..) => PRODUCT,
        Expr::Neg(_) => UNARY,
        Expr::Scalar(ScalarLit::Int(n)) if n.sign() == num_bigint::Sign::Minus => UNARY,
        _ => ATOM,
    }
}

fn write_expr(out: &mut String, e: &Expr, min: u8) -> fmt::Result {
    if precedence(e) < min {
        out.push('(');
        write_expr(out, e, SUM)?;
        out.push(')');
        return Ok(());
    }
    match e {
        Expr::Gen(g) => write!(out, "{g}"),
        Expr::Scalar(s) => write_scalar(out, s),
        Expr::Neg(x) => {
            out.push('-');
            write_expr(out, x, UNARY)
        }
        Expr::Add(l, r) => binary(out, l, " + ", r, SUM),
        Expr::Sub(l, r) => binary(out, l, " - ", r, SUM),
        Expr::Mul(l, r) => binary(out, l, "*", r, PRODUCT),
        Expr::Div(l, r) => binary(out, l, "/", r, PRODUCT),
        Expr::Bracket {
            kind,
            left,
            right,
            weight,
        } => {
            let (open, close) = match kind {
                BracketKind::Commutator => ("[", "]"),
                BracketKind::Anticommutator => ("{", "}"),
                BracketKind::Super => ("[[", "]]"),
            };
            out.push_str(open);
            write_expr(out, left, SUM)?;
            out.push_str(", ");
            write_expr(out, right, SUM)?;
            out.push_str(close);
            write_weight(out, weight)
        }
    }
}

/// Left operands bind at the operator's level; right operands one above,
/// matching the left-associative grammar.
fn binary(out: &mut String, l: &Expr, op: &str, r: &Expr, level: u8) -> fmt::Result {
    write_expr(out, l, level)?;
    out.push_str(op);
    write_expr(out, r, level + 1)
}

fn write_scalar(out: &mut String, s: &ScalarLit) -> fmt::Result {
    match s {
        ScalarLit::Int(n) => write!(out, "{n}"),
        ScalarLit::QPow(k) => write_q(out, *k),
    }
}

fn write_q(out: &mut String, k: i64) -> fmt::Result {
    match k {
        1 => out.write_str("q"),
        -1 => out.write_str("qb"),
        _ => write!(out, "q^{k}"),
    }
}

fn write_weight(out: &mut String, w: &Weight) -> fmt::Result {
    match w {
        Weight::One => Ok(()),
        Weight::QPow(k) => {
            out.push('_');
            write_q(out, *k)
        }
        Weight::Scalar(e) => {
            out.push_str("_(");
            write_expr(out, e, SUM)?;
            out.push(')');
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn roundtrip(text: &str) {
        let e = parse(text).unwrap();
        let shown = pretty(&e);
        assert_eq!(parse(&shown).unwrap(), e, "{text} -> {shown}");
    }

    #[test]
    fn canonical_forms() {
        let e = parse("[ e2 ,[e2,[e2,e1]_qb]]_q").unwrap();
        assert_eq!(pretty(&e), "[e2, [e2, [e2, e1]_qb]]_q");
        let e = parse("x1 - (x2 - x3)").unwrap();
        assert_eq!(pretty(&e), "x1 - (x2 - x3)");
        let e = parse("((e1*f1))*k1").unwrap();
        assert_eq!(pretty(&e), "e1*f1*k1");
        let e = parse("e1*(f1*k1)").unwrap();
        assert_eq!(pretty(&e), "e1*(f1*k1)");
        assert_eq!(pretty(&parse("-(-e1)").unwrap()), "--e1");
        assert_eq!(pretty(&parse("q^-1 + q^1 + q^0").unwrap()), "qb + q + q^0");
    }

    #[test]
    fn roundtrips() {
        for t in [
            "[[a-1, a+2]]_q^-1",
            "[[[a+1, a-2]], a+1]",
            "{[e2, e1]_q, [e2, e3]_qb}",
            "2*(L1 - Lb1)/(q - qb)",
            "-e1*-f1 - -k1",
            "[e1, f1]_(q + 1) + y3*x2",
            "(e1 + f1)/2/q",
            "e1/(2/q)",
        ] {
            roundtrip(t);
        }
    }
}
