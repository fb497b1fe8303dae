use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::signature::{AlgebraSignature, Sign};

/// A root as integer coordinates in the orthogonal basis `eps_1..eps_N`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Root(pub Vec<i64>);

impl Root {
    fn basis(rank: u16, terms: &[(u16, i64)]) -> Root {
        let mut v = vec![0; usize::from(rank)];
        for &(i, c) in terms {
            v[usize::from(i) - 1] += c;
        }
        Root(v)
    }
}

impl fmt::Display for Root {
    /// `eps1 - eps2`, `2*eps1`, `-eps3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "eps{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// All roots: `xi eps_i + eta eps_j` (`i != j`), `xi eps_i`, and
/// `2 xi eps_k` for `k <= m`. Sorted, without repetition.
pub fn root_system(sig: &AlgebraSignature) -> Vec<Root> {
    let n = sig.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for xi in Sign::BOTH {
                for eta in Sign::BOTH {
                    out.push(Root::basis(n, &[(i, xi.value()), (j, eta.value())]));
                }
            }
        }
        for xi in Sign::BOTH {
            out.push(Root::basis(n, &[(i, xi.value())]));
            if i <= sig.m() {
                out.push(Root::basis(n, &[(i, 2 * xi.value())]));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The root of the Green generator `a_i^±`, namely `∓eps_i`.
pub fn green_root(sig: &AlgebraSignature, i: u16, sign: Sign) -> Root {
    Root::basis(sig.rank(), &[(i, -sign.value())])
}

/// `(a_i^±, ∓eps_i)` for every Green generator.
pub fn root_assignment(sig: &AlgebraSignature) -> Vec<(crate::superalg::Letter, Root)> {
    let mut out = Vec::new();
    for i in 1..=sig.rank() {
        for s in [Sign::Minus, Sign::Plus] {
            out.push((sig.a(i, s), green_root(sig, i, s)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn smallest_root_system() {
        let s = AlgebraSignature::new(1, 1).unwrap();
        let roots = root_system(&s);
        assert_eq!(roots.len(), 10);
        assert!(roots.contains(&Root(vec![2, 0])));
        assert!(roots.contains(&Root(vec![-2, 0])));
        assert!(!roots.contains(&Root(vec![0, 2])));
        assert_eq!(green_root(&s, 1, Sign::Plus).to_string(), "-eps1");
        assert_eq!(Root(vec![1, -2]).to_string(), "eps1 - 2*eps2");
    }
}
