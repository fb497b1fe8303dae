use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalars::Sqrt2Scalar;
use crate::superalg::Parity;

/// Row/column labels `-2n, ..., -1, 0, 1, ..., 2m`, stored at positions
/// `0..dim` in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Labels {
    pub m: u16,
    pub n: u16,
}

impl Labels {
    pub fn dim(&self) -> usize {
        2 * (usize::from(self.m) + usize::from(self.n)) + 1
    }

    pub fn min(&self) -> i32 {
        -2 * i32::from(self.n)
    }

    pub fn max(&self) -> i32 {
        2 * i32::from(self.m)
    }

    pub fn position(&self, label: i32) -> usize {
        assert!(
            (self.min()..=self.max()).contains(&label),
            "label {label} out of range"
        );
        (label - self.min()) as usize
    }

    pub fn label(&self, position: usize) -> i32 {
        position as i32 + self.min()
    }

    /// Labels `1..2m` belong to the symplectic part; the rest to the
    /// orthogonal part.
    pub fn is_symplectic(&self, label: i32) -> bool {
        label > 0
    }

    /// Which of the five diagonal blocks (sizes `n, n, 1, m, m`) holds the label.
    pub fn block(&self, label: i32) -> usize {
        let (n, m) = (i32::from(self.n), i32::from(self.m));
        match label {
            l if l < -n => 0,
            l if l < 0 => 1,
            0 => 2,
            l if l <= m => 3,
            _ => 4,
        }
    }
}

/// Dense square matrix over `Q(sqrt 2)` with labelled rows and columns.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix {
    labels: Labels,
    entries: Vec<Sqrt2Scalar>,
}

impl ExactMatrix {
    pub fn zero(labels: Labels) -> Self {
        let d = labels.dim();
        ExactMatrix {
            labels,
            entries: vec![Sqrt2Scalar::zero(); d * d],
        }
    }

    pub fn identity(labels: Labels) -> Self {
        let mut x = Self::zero(labels);
        for p in 0..labels.dim() {
            x.entries[p * labels.dim() + p] = Sqrt2Scalar::one();
        }
        x
    }

    /// The matrix unit `e_{AB}`.
    pub fn unit(labels: Labels, row: i32, col: i32) -> Self {
        let mut x = Self::zero(labels);
        x.set(row, col, Sqrt2Scalar::one());
        x
    }

    pub fn labels(&self) -> Labels {
        self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.dim()
    }

    pub fn get(&self, row: i32, col: i32) -> &Sqrt2Scalar {
        let (r, c) = (self.labels.position(row), self.labels.position(col));
        &self.entries[r * self.dim() + c]
    }

    pub fn set(&mut self, row: i32, col: i32, v: Sqrt2Scalar) {
        let (r, c) = (self.labels.position(row), self.labels.position(col));
        let d = self.dim();
        self.entries[r * d + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Sqrt2Scalar::is_zero)
    }

    /// Nonzero entries as `(row label, column label, value)` in row-major order.
    pub fn nonzero_entries(&self) -> Vec<(i32, i32, Sqrt2Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for (k, v) in self.entries.iter().enumerate() {
            if !v.is_zero() {
                out.push((
                    self.labels.label(k / d),
                    self.labels.label(k % d),
                    v.clone(),
                ));
            }
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(&Sqrt2Scalar, &Sqrt2Scalar) -> Sqrt2Scalar) -> Self {
        assert_eq!(self.labels, other.labels, "matrix size mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        ExactMatrix {
            labels: self.labels,
            entries,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            labels: self.labels,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Sqrt2Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.labels);
        }
        ExactMatrix {
            labels: self.labels,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Product, skipping zero entries of the left factor.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.labels, other.labels, "matrix size mismatch");
        let d = self.dim();
        let mut out = Self::zero(self.labels);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if !b.is_zero() {
                        let t = a * b;
                        let slot = &mut out.entries[i * d + j];
                        *slot = &*slot + &t;
                    }
                }
            }
        }
        out
    }

    /// Parts supported on the even block pattern (orthogonal x orthogonal
    /// and symplectic x symplectic) and on the odd one.
    pub fn graded_parts(&self) -> (Self, Self) {
        let d = self.dim();
        let mut even = Self::zero(self.labels);
        let mut odd = Self::zero(self.labels);
        for (k, v) in self.entries.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (r, c) = (self.labels.label(k / d), self.labels.label(k % d));
            if self.labels.is_symplectic(r) == self.labels.is_symplectic(c) {
                even.entries[k] = v.clone();
            } else {
                odd.entries[k] = v.clone();
            }
        }
        (even, odd)
    }

    /// `Some(parity)` when supported on one block pattern; the zero matrix is
    /// even.
    pub fn parity(&self) -> Option<Parity> {
        let (even, odd) = self.graded_parts();
        match (even.is_zero(), odd.is_zero()) {
            (_, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            (false, false) => None,
        }
    }

    /// `x y - (-1)^(deg x deg y) y x`, split over homogeneous parts.
    pub fn supercommutator(x: &Self, y: &Self) -> Self {
        Self::super_bracket(x, y, &Sqrt2Scalar::one())
    }

    /// `x y - (-1)^(deg x deg y) w y x` per pair of homogeneous parts.
    pub fn super_bracket(x: &Self, y: &Self, w: &Sqrt2Scalar) -> Self {
        let (xe, xo) = x.graded_parts();
        let (ye, yo) = y.graded_parts();
        let mut out = Self::zero(x.labels);
        for (a, pa) in [(&xe, Parity::Even), (&xo, Parity::Odd)] {
            if a.is_zero() {
                continue;
            }
            for (b, pb) in [(&ye, Parity::Even), (&yo, Parity::Odd)] {
                if b.is_zero() {
                    continue;
                }
                let s = Sqrt2Scalar::from_int(pa.sign_with(pb));
                out = out.add(&a.mul(b).sub(&b.mul(a).scale(&(w * &s))));
            }
        }
        out
    }

    /// Whether the matrix has the block form of `osp(2n+1/2m)`: with blocks
    /// of sizes `n, n, 1, m, m`,
    ///
    /// ```text
    ///  a     b     u     x    x1
    ///  c    -a^T   v     y    y1
    /// -v^T  -u^T   0     z    z1
    ///  y1^T  x1^T  z1^T  d    e
    /// -y^T  -x^T  -z^T   f   -d^T
    /// ```
    ///
    /// with `b, c` skew-symmetric and `e, f` symmetric.
    pub fn is_osp(&self) -> bool {
        let l = self.labels;
        let (n, m) = (i32::from(l.n), i32::from(l.m));
        // Label of position `t` inside block `b`.
        let lab = |b: usize, t: i32| -> i32 {
            match b {
                0 => -2 * n + t,
                1 => -n + t,
                2 => 0,
                3 => 1 + t,
                _ => m + 1 + t,
            }
        };
        let size = |b: usize| -> i32 {
            match b {
                0 | 1 => n,
                2 => 1,
                _ => m,
            }
        };
        let at = |bi: usize, i: i32, bj: usize, j: i32| self.get(lab(bi, i), lab(bj, j)).clone();
        // Each constraint: entry(bi,i ; bj,j) == sign * entry(transposed partner).
        let pairs: [(usize, usize, usize, usize, i64); 12] = [
            (1, 1, 0, 0, -1), // -a^T
            (0, 1, 0, 1, -1), // b skew (checked against itself transposed)
            (1, 0, 1, 0, -1), // c skew
            (2, 0, 1, 2, -1), // -v^T
            (2, 1, 0, 2, -1), // -u^T
            (3, 0, 1, 4, 1),  // y1^T
            (3, 1, 0, 4, 1),  // x1^T
            (3, 2, 2, 4, 1),  // z1^T
            (4, 0, 1, 3, -1), // -y^T
            (4, 1, 0, 3, -1), // -x^T
            (4, 2, 2, 3, -1), // -z^T
            (4, 4, 3, 3, -1), // -d^T
        ];
        for (bi, bj, pi, pj, s) in pairs {
            for i in 0..size(bi) {
                for j in 0..size(bj) {
                    let lhs = at(bi, i, bj, j);
                    let rhs =
                        at(pi, j, pj, i).scale(&crate::scalars::Rational::from_integer(s.into()));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        // e, f symmetric; the (0,0) entry vanishes.
        for (b1, b2) in [(3, 4), (4, 3)] {
            for i in 0..m {
                for j in 0..m {
                    if at(b1, i, b2, j) != at(b1, j, b2, i) {
                        return false;
                    }
                }
            }
        }
        self.get(0, 0).is_zero()
    }

    /// Whether all nonzero entries lie in row 0 or column 0 (but not both),
    /// the support of the subspace spanned by the Green generators.
    pub fn in_green_span_pattern(&self) -> bool {
        self.nonzero_entries()
            .iter()
            .all(|&(r, c, _)| (r == 0) != (c == 0))
    }

    /// Flattened entries in row-major order.
    pub fn entries(&self) -> &[Sqrt2Scalar] {
        &self.entries
    }
}

impl fmt::Display for ExactMatrix {
    /// Sparse listing: `{(A,B): v, ...}` by label.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (r, c, v)) in self.nonzero_entries().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({r},{c}): {v}")?;
        }
        f.write_str("}")
    }
}
