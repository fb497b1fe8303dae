//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | factor
//! factor  := scalar | gen | bracket | '(' expr ')'
//! bracket := ( '[' expr ',' expr ']'
//!            | '{' expr ',' expr '}'
//!            | '[[' expr ',' expr ']]' ) ('_' weight)?
//! gen     := ('e' | 'f' | 'k' | 'kb' | 'h' | 'L' | 'Lb' | 'x' | 'y') INT
//!          | 'a' ('+' | '-') INT
//! scalar  := INT | 'q' | 'qb' | 'q^' SIGNED_INT
//! weight  := 'q' | 'qb' | 'q^' SIGNED_INT | '(' expr ')'
//! ```
//!
//! `[[` opens a super bracket only when the matching `]]` follows the second
//! argument; otherwise it is read as two nested plain brackets.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::ast::{Expr, GenRef, ScalarLit, Weight};
use crate::superalg::{BracketKind, LetterKind, Parity};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at {}:{}: expected ",
            self.line, self.column
        )?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(" or ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ", found {}", self.found)
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        furthest: None,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    /// Deepest error seen inside an abandoned `[[` attempt.
    furthest: Option<ParseError>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// The byte right at the cursor, without skipping whitespace.
    fn peek_raw(&self, offset: usize) -> Option<u8> {
        self.src.get(self.pos + offset).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        (line, col)
    }

    fn error(&mut self, expected: &[&'static str]) -> ParseError {
        self.skip_ws();
        let (line, column) = self.location(self.pos);
        let found = match self.src.get(self.pos) {
            None => "end of input".to_string(),
            Some(&b) => alloc::format!("'{}'", b as char),
        };
        let err = ParseError {
            line,
            column,
            expected: expected.to_vec(),
            found,
        };
        match &self.furthest {
            Some(f) if (f.line, f.column) > (err.line, err.column) => f.clone(),
            _ => err,
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        const FACTOR: &[&str] = &["integer", "generator", "q", "'('", "'['", "'{'"];
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')', "')'")?;
                Ok(e)
            }
            Some(b'[') => {
                let outer = self.furthest.clone();
                let mut retried = false;
                if self.peek_raw(1) == Some(b'[') {
                    let save = self.pos;
                    match self.super_bracket() {
                        Ok(e) => return Ok(e),
                        Err(err) => {
                            if self
                                .furthest
                                .as_ref()
                                .is_none_or(|f| (err.line, err.column) > (f.line, f.column))
                            {
                                self.furthest = Some(err);
                            }
                            self.pos = save;
                            retried = true;
                        }
                    }
                }
                self.pos += 1;
                let (l, r) = self.pair(b']', "']'")?;
                let weight = self.weight()?;
                if retried {
                    // The abandoned attempt no longer explains later errors.
                    self.furthest = outer;
                }
                Ok(Expr::Bracket {
                    kind: BracketKind::Commutator,
                    left: Box::new(l),
                    right: Box::new(r),
                    weight,
                })
            }
            Some(b'{') => {
                self.pos += 1;
                let (l, r) = self.pair(b'}', "'}'")?;
                let weight = self.weight()?;
                Ok(Expr::Bracket {
                    kind: BracketKind::Anticommutator,
                    left: Box::new(l),
                    right: Box::new(r),
                    weight,
                })
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Scalar(ScalarLit::Int(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() => self.identifier(),
            _ => Err(self.error(FACTOR)),
        }
    }

    fn super_bracket(&mut self) -> Result<Expr, ParseError> {
        self.pos += 2;
        let l = self.expr()?;
        self.expect(b',', "','")?;
        let r = self.expr()?;
        self.skip_ws();
        if !(self.peek_raw(0) == Some(b']') && self.peek_raw(1) == Some(b']')) {
            return Err(self.error(&["']]'"]));
        }
        self.pos += 2;
        let weight = self.weight()?;
        Ok(Expr::Bracket {
            kind: BracketKind::Super,
            left: Box::new(l),
            right: Box::new(r),
            weight,
        })
    }

    fn pair(&mut self, close: u8, what: &'static str) -> Result<(Expr, Expr), ParseError> {
        let l = self.expr()?;
        self.expect(b',', "','")?;
        let r = self.expr()?;
        self.expect(close, what)?;
        Ok((l, r))
    }

    fn weight(&mut self) -> Result<Weight, ParseError> {
        // '_' must follow the closing bracket directly.
        if self.peek_raw(0) != Some(b'_') {
            return Ok(Weight::One);
        }
        self.pos += 1;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')', "')'")?;
                Ok(Weight::Scalar(Box::new(e)))
            }
            Some(b'q') => {
                let word = self.word();
                match word.as_str() {
                    "q" => Ok(Weight::QPow(self.q_exponent()?)),
                    "qb" => Ok(Weight::QPow(-1)),
                    _ => Err(self.error(&["q", "qb", "q^k", "'('"])),
                }
            }
            _ => Err(self.error(&["q", "qb", "q^k", "'('"])),
        }
    }

    /// After a bare `q`: an optional `^SIGNED_INT`.
    fn q_exponent(&mut self) -> Result<i64, ParseError> {
        if self.peek_raw(0) != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let n = self.integer()?;
        let n: i64 = i64::try_from(n).map_err(|_| self.error(&["exponent fitting in 64 bits"]))?;
        Ok(if neg { -n } else { n })
    }

    fn word(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["integer"]));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    /// Index directly attached to a generator name.
    fn index(&mut self) -> Result<u16, ParseError> {
        if !self.peek_raw(0).is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error(&["generator index"]));
        }
        let start = self.pos;
        let n = self.integer()?;
        u16::try_from(n).map_err(|_| {
            self.pos = start;
            self.error(&["generator index below 65536"])
        })
    }

    fn identifier(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let word = self.word();
        let kind = match word.as_str() {
            "q" => return Ok(Expr::Scalar(ScalarLit::QPow(self.q_exponent()?))),
            "qb" => return Ok(Expr::Scalar(ScalarLit::QPow(-1))),
            "a" => {
                let kind = match self.peek_raw(0) {
                    Some(b'+') => LetterKind::APlus,
                    Some(b'-') => LetterKind::AMinus,
                    _ => return Err(self.error(&["'+'", "'-'"])),
                };
                self.pos += 1;
                return Ok(Expr::Gen(GenRef::new(kind, self.index()?)));
            }
            "x" => {
                return Ok(Expr::Gen(GenRef::abstract_letter(
                    self.index()?,
                    Parity::Even,
                )))
            }
            "y" => {
                return Ok(Expr::Gen(GenRef::abstract_letter(
                    self.index()?,
                    Parity::Odd,
                )))
            }
            "e" => LetterKind::E,
            "f" => LetterKind::F,
            "k" => LetterKind::K,
            "kb" => LetterKind::KBar,
            "h" => LetterKind::H,
            "L" => LetterKind::L,
            "Lb" => LetterKind::LBar,
            _ => {
                self.pos = start;
                return Err(self.error(&["generator", "q", "qb"]));
            }
        };
        Ok(Expr::Gen(GenRef::new(kind, self.index()?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(kind: LetterKind, i: u16) -> Expr {
        Expr::gen(kind, i)
    }

    #[test]
    fn super_bracket_of_green_generators() {
        let e = parse("[[a-1, a+1]]").unwrap();
        assert_eq!(
            e,
            Expr::sup(g(LetterKind::AMinus, 1), g(LetterKind::APlus, 1))
        );
    }

    #[test]
    fn nested_plain_brackets_with_double_close() {
        let e = parse("[e2,[e2,[e2,e1]_qb]]_q").unwrap();
        let inner = Expr::comm_w(g(LetterKind::E, 2), g(LetterKind::E, 1), -1);
        let mid = Expr::comm(g(LetterKind::E, 2), inner);
        assert_eq!(e, Expr::comm_w(g(LetterKind::E, 2), mid, 1));
    }

    #[test]
    fn anticommutator_of_weighted_commutators() {
        let e = parse("{[e2,e1]_q,[e2,e3]_qb}").unwrap();
        let l = Expr::comm_w(g(LetterKind::E, 2), g(LetterKind::E, 1), 1);
        let r = Expr::comm_w(g(LetterKind::E, 2), g(LetterKind::E, 3), -1);
        assert_eq!(e, Expr::anti(l, r));
    }

    #[test]
    fn plain_bracket_starting_with_bracket() {
        let e = parse("[[e1,e2],e3]").unwrap();
        let inner = Expr::comm(g(LetterKind::E, 1), g(LetterKind::E, 2));
        assert_eq!(e, Expr::comm(inner, g(LetterKind::E, 3)));
        let e = parse("[[[a+1,a-2]],a+1]_q^-2").unwrap();
        let inner = Expr::sup(g(LetterKind::APlus, 1), g(LetterKind::AMinus, 2));
        assert_eq!(e, Expr::comm_w(inner, g(LetterKind::APlus, 1), -2));
    }

    #[test]
    fn scalars_and_quotients() {
        let e = parse("2*(L1 - Lb1)/(q - q^-1)").unwrap();
        let num = Expr::int(2).times(g(LetterKind::L, 1).minus(g(LetterKind::LBar, 1)));
        assert_eq!(e, num.over(Expr::q_pow(1).minus(Expr::q_pow(-1))));
        assert_eq!(parse("-qb").unwrap(), -Expr::q_pow(-1));
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let err = parse("[e1, e2").unwrap_err();
        assert_eq!((err.line, err.column), (1, 8));
        assert!(err.expected.contains(&"']'"));
        let err = parse("e1 +\n  * f2").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        let err = parse("z3").unwrap_err();
        assert_eq!(err.column, 1);
        assert!(parse("a*1").is_err());
        assert!(parse("e").is_err());
    }
}
