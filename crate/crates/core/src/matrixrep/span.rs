use alloc::vec::Vec;

use super::matrix::ExactMatrix;
use crate::scalars::Sqrt2Scalar;

/// Row-echelon basis of the span of a list of matrices, with the coordinates
/// of each basis row in terms of the inputs.
#[derive(Clone, Debug)]
pub struct Span {
    rows: Vec<(Vec<Sqrt2Scalar>, Vec<Sqrt2Scalar>)>,
    pivots: Vec<usize>,
    inputs: usize,
}

impl Span {
    pub fn new(generators: &[ExactMatrix]) -> Self {
        let inputs = generators.len();
        let mut span = Span {
            rows: Vec::new(),
            pivots: Vec::new(),
            inputs,
        };
        for (t, g) in generators.iter().enumerate() {
            let mut coords = alloc::vec![Sqrt2Scalar::zero(); inputs];
            coords[t] = Sqrt2Scalar::one();
            let (v, c) = span.reduce(g.entries().to_vec(), coords);
            if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[p].inv().expect("nonzero pivot");
                let v: Vec<_> = v.iter().map(|x| x * &inv).collect();
                let c: Vec<_> = c.iter().map(|x| x * &inv).collect();
                span.rows.push((v, c));
                span.pivots.push(p);
            }
        }
        span
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(
        &self,
        mut v: Vec<Sqrt2Scalar>,
        mut c: Vec<Sqrt2Scalar>,
    ) -> (Vec<Sqrt2Scalar>, Vec<Sqrt2Scalar>) {
        for ((row, rc), &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x = &*x - &(&f * y);
            }
            for (x, y) in c.iter_mut().zip(rc) {
                *x = &*x - &(&f * y);
            }
        }
        (v, c)
    }

    /// Coefficients `c` with `target = sum c_t * generators[t]`, if any.
    pub fn solve(&self, target: &ExactMatrix) -> Option<Vec<Sqrt2Scalar>> {
        let zero = alloc::vec![Sqrt2Scalar::zero(); self.inputs];
        let (v, c) = self.reduce(target.entries().to_vec(), zero);
        // `v = target - sum c_t g_t` after reduction.
        v.iter()
            .all(Sqrt2Scalar::is_zero)
            .then(|| c.iter().map(|x| -x).collect())
    }

    pub fn contains(&self, target: &ExactMatrix) -> bool {
        self.solve(target).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixrep::Labels;

    #[test]
    fn solves_small_combination() {
        let l = Labels { m: 1, n: 1 };
        let x = ExactMatrix::unit(l, 0, 1);
        let y = ExactMatrix::unit(l, 1, 0).add(&x);
        let span = Span::new(&[x.clone(), y.clone(), x.add(&y)]);
        assert_eq!(span.rank(), 2);
        let t = x
            .scale(&Sqrt2Scalar::sqrt2())
            .add(&y.scale(&Sqrt2Scalar::from_int(3)));
        let c = span.solve(&t).unwrap();
        let back = x
            .scale(&c[0])
            .add(&y.scale(&c[1]))
            .add(&x.add(&y).scale(&c[2]));
        assert_eq!(back, t);
        assert!(!span.contains(&ExactMatrix::unit(l, 2, 2)));
    }
}
