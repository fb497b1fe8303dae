use core::fmt;

use crate::superalg::{Letter, LetterKind, Parity};

/// Which of the two Green generators `a_i^+` / `a_i^-`, or a sign `±1` in
/// relation indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SignatureError {
    #[error("m must be at least 1 (got {0})")]
    ZeroM(u16),
    #[error("n must be at least 1 (got {0})")]
    ZeroN(u16),
}

/// `osp(2n+1/2m)`: `m` para-Bose pairs (odd Green generators) and `n`
/// para-Fermi pairs (even Green generators), `N = m + n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraSignature {
    m: u16,
    n: u16,
}

impl AlgebraSignature {
    pub fn new(m: u16, n: u16) -> Result<Self, SignatureError> {
        if m == 0 {
            return Err(SignatureError::ZeroM(m));
        }
        if n == 0 {
            return Err(SignatureError::ZeroN(n));
        }
        Ok(AlgebraSignature { m, n })
    }

    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    /// `N = m + n`.
    pub fn rank(&self) -> u16 {
        self.m + self.n
    }

    /// Size of the defining matrices, `2n + 2m + 1`.
    pub fn matrix_dim(&self) -> usize {
        2 * (self.m as usize + self.n as usize) + 1
    }

    /// The grading `<i>`: odd for `i <= m`, even above (including `i = N+1`).
    pub fn grading(&self, i: u16) -> Parity {
        Parity::from_odd(i >= 1 && i <= self.m)
    }

    /// `(-1)^<i>`.
    pub fn grading_sign(&self, i: u16) -> i64 {
        if self.grading(i).is_odd() {
            -1
        } else {
            1
        }
    }

    pub fn contains(&self, i: u16) -> bool {
        (1..=self.rank()).contains(&i)
    }

    /// The letter of the given kind and index with its parity fixed by the
    /// grading: `e_m`, `f_m` and `a_i^±` (`i <= m`) are odd, everything else
    /// is even. Abstract letters are even here.
    pub fn letter(&self, kind: LetterKind, i: u16) -> Letter {
        let odd = match kind {
            LetterKind::E | LetterKind::F => i == self.m,
            LetterKind::AMinus | LetterKind::APlus => self.grading(i).is_odd(),
            _ => false,
        };
        Letter::new(kind, i, Parity::from_odd(odd))
    }

    pub fn e(&self, i: u16) -> Letter {
        self.letter(LetterKind::E, i)
    }
    pub fn f(&self, i: u16) -> Letter {
        self.letter(LetterKind::F, i)
    }
    pub fn k(&self, i: u16) -> Letter {
        self.letter(LetterKind::K, i)
    }
    pub fn kbar(&self, i: u16) -> Letter {
        self.letter(LetterKind::KBar, i)
    }
    pub fn h(&self, i: u16) -> Letter {
        self.letter(LetterKind::H, i)
    }
    pub fn l(&self, i: u16) -> Letter {
        self.letter(LetterKind::L, i)
    }
    pub fn lbar(&self, i: u16) -> Letter {
        self.letter(LetterKind::LBar, i)
    }
    pub fn a(&self, i: u16, sign: Sign) -> Letter {
        match sign {
            Sign::Plus => self.letter(LetterKind::APlus, i),
            Sign::Minus => self.letter(LetterKind::AMinus, i),
        }
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "osp({}/{}) [m={}, n={}]",
            2 * self.n + 1,
            2 * self.m,
            self.m,
            self.n
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grading_and_parities() {
        let s = AlgebraSignature::new(1, 1).unwrap();
        assert!(s.grading(1).is_odd());
        assert!(!s.grading(2).is_odd());
        assert!(!s.grading(3).is_odd());
        assert!(s.e(1).parity.is_odd());
        assert!(!s.e(2).parity.is_odd());
        assert!(s.a(1, Sign::Plus).parity.is_odd());
        assert!(!s.a(2, Sign::Minus).parity.is_odd());
        assert!(!s.k(1).parity.is_odd());
        let s = AlgebraSignature::new(2, 1).unwrap();
        assert!(!s.e(1).parity.is_odd());
        assert!(s.e(2).parity.is_odd());
        assert!(s.a(1, Sign::Minus).parity.is_odd());
    }

    #[test]
    fn rejects_zero_ranks() {
        assert_eq!(AlgebraSignature::new(0, 2), Err(SignatureError::ZeroM(0)));
        assert_eq!(AlgebraSignature::new(2, 0), Err(SignatureError::ZeroN(0)));
    }
}
