use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Deref;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Sum in `Z2`.
    pub fn plus(self, other: Parity) -> Parity {
        Parity::from_odd(self.is_odd() ^ other.is_odd())
    }

    /// `(-1)^(self * other)` as `+1` / `-1`.
    pub fn sign_with(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Generator kinds. The declaration order is the alphabet order used by
/// words: `f < kbar < k < e` is the triangular (PBW) order of the rewriting
/// engine; the remaining kinds only need some fixed position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LetterKind {
    F,
    KBar,
    K,
    E,
    /// Classical Cartan generator `h_i`.
    H,
    LBar,
    L,
    AMinus,
    APlus,
    /// Indexed letter with a caller-chosen parity.
    Abstract,
}

impl LetterKind {
    pub fn prefix(self) -> &'static str {
        match self {
            LetterKind::F => "f",
            LetterKind::KBar => "kb",
            LetterKind::K => "k",
            LetterKind::E => "e",
            LetterKind::H => "h",
            LetterKind::LBar => "Lb",
            LetterKind::L => "L",
            LetterKind::AMinus => "a-",
            LetterKind::APlus => "a+",
            LetterKind::Abstract => "x",
        }
    }
}

/// One generator symbol. Parity is part of the symbol: it is fixed by the
/// algebra signature when the letter is created.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: u16,
    pub parity: Parity,
}

impl Letter {
    pub const fn new(kind: LetterKind, index: u16, parity: Parity) -> Self {
        Letter {
            kind,
            index,
            parity,
        }
    }

    pub fn abstract_letter(index: u16, parity: Parity) -> Self {
        Letter::new(LetterKind::Abstract, index, parity)
    }
}

impl fmt::Display for Letter {
    /// `e1`, `kb2`, `a+3`, `Lb1`; abstract letters print as `x<i>` when even
    /// and `y<i>` when odd.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.parity) {
            (LetterKind::Abstract, Parity::Odd) => write!(f, "y{}", self.index),
            (kind, _) => write!(f, "{}{}", kind.prefix(), self.index),
        }
    }
}

/// A word in the free monoid. Ordered by length first, then
/// lexicographically by letter.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(l: Letter) -> Self {
        Word(alloc::vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn parity(&self) -> Parity {
        self.0.iter().fold(Parity::Even, |p, l| p.plus(l.parity))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `prefix ++ middle ++ suffix`.
    pub fn splice(prefix: &[Letter], middle: &[Letter], suffix: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(prefix.len() + middle.len() + suffix.len());
        v.extend_from_slice(prefix);
        v.extend_from_slice(middle);
        v.extend_from_slice(suffix);
        Word(v)
    }
}

/// Compares two letter slices in word order.
pub fn cmp_letters(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_letters(&self.0, &other.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    const E1: Letter = Letter::new(LetterKind::E, 1, Parity::Odd);
    const F2: Letter = Letter::new(LetterKind::F, 2, Parity::Even);
    const K1: Letter = Letter::new(LetterKind::K, 1, Parity::Even);

    #[test]
    fn length_first_order() {
        let short = Word::new(vec![E1]);
        let long = Word::new(vec![F2, F2]);
        assert!(short < long);
        assert!(Word::new(vec![F2, E1]) < Word::new(vec![E1, F2]));
        assert!(Word::new(vec![K1, E1]) < Word::new(vec![E1, K1]));
    }

    #[test]
    fn parity_is_additive() {
        assert_eq!(Word::new(vec![E1, E1]).parity(), Parity::Even);
        assert_eq!(Word::new(vec![E1, F2]).parity(), Parity::Odd);
        assert_eq!(Word::empty().parity(), Parity::Even);
    }

    #[test]
    fn rendering() {
        assert_eq!(Word::new(vec![E1, F2]).to_string(), "e1*f2");
        assert_eq!(
            Letter::new(LetterKind::APlus, 3, Parity::Even).to_string(),
            "a+3"
        );
        assert_eq!(Letter::abstract_letter(2, Parity::Odd).to_string(), "y2");
        assert_eq!(Word::empty().to_string(), "1");
    }
}
