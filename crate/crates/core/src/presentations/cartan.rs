use alloc::vec::Vec;
use core::fmt;

use super::signature::AlgebraSignature;

/// Symmetric `N x N` Cartan matrix of `B(n/m)`, 1-based access.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

/// The Cartan matrix of `B(4/4) = osp(9/8)`.
pub const B44: [[i64; 8]; 8] = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 1],
    [0, 0, 0, 0, 0, 0, 1, -1],
];

fn delta(a: u16, b: u16) -> i64 {
    i64::from(a == b)
}

/// `a_ij = (-1)^<j> d(i+1,j) + (-1)^<i> d(i,j+1) - [(-1)^<j+1> + (-1)^<j>] d(i,j) + d(i,N) d(j,N)`.
pub fn cartan_entry(sig: &AlgebraSignature, i: u16, j: u16) -> i64 {
    let s = |t| sig.grading_sign(t);
    let n = sig.rank();
    s(j) * delta(i + 1, j) + s(i) * delta(i, j + 1) - (s(j + 1) + s(j)) * delta(i, j)
        + delta(i, n) * delta(j, n)
}

pub fn cartan_matrix(sig: &AlgebraSignature) -> CartanMatrix {
    let n = sig.rank();
    let mut entries = Vec::with_capacity(usize::from(n) * usize::from(n));
    for i in 1..=n {
        for j in 1..=n {
            entries.push(cartan_entry(sig, i, j));
        }
    }
    CartanMatrix {
        rank: usize::from(n),
        entries,
    }
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `a_ij` with `1 <= i, j <= N`.
    pub fn get(&self, i: u16, j: u16) -> i64 {
        let (i, j) = (usize::from(i), usize::from(j));
        assert!(
            (1..=self.rank).contains(&i) && (1..=self.rank).contains(&j),
            "Cartan index out of range"
        );
        self.entries[(i - 1) * self.rank + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.rank)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let r = self.rank;
        (0..r).all(|i| (0..r).all(|j| self.entries[i * r + j] == self.entries[j * r + i]))
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.rank) {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>3}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b44() {
        let a = cartan_matrix(&AlgebraSignature::new(4, 4).unwrap());
        let expected: Vec<Vec<i64>> = B44.iter().map(|r| r.to_vec()).collect();
        assert_eq!(a.rows(), expected);
    }

    #[test]
    fn smallest() {
        let a = cartan_matrix(&AlgebraSignature::new(1, 1).unwrap());
        assert_eq!(a.rows(), alloc::vec![alloc::vec![0, 1], alloc::vec![1, -1]]);
    }
}
