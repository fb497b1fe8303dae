//! The weighted Jacobi-type identity
//!
//! ```text
//! [[A, [B,C]_x]]_y = [[ [[A,B]]_z, C ]]_t + (-1)^(deg A deg B) z [[B, [[A,C]]_r]]_s
//! ```
//!
//! with `x = z s`, `y = z r`, `t = z s r`, checked in the free algebra on
//! three abstract letters at sampled rational `(z, r, s)`.
//!
//! Every word coefficient of either side is a polynomial in `(z, r, s)` of
//! degree at most 2 in `z` and at most 1 in `r` and in `s` (the top term is
//! `z^2 r s`, from `x y` and `z t`). Vanishing on [`exact_grid`] therefore
//! proves the identity; random samples are an additional spot check.

use alloc::vec::Vec;

use num_traits::Zero;

use super::verdict::Status;
use crate::scalars::Rational;
use crate::superalg::{BracketKind, Element, Letter, Parity};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BracketIdentityError {
    #[error("the identity is only claimed when B or C is even (got B {b}, C {c})")]
    Hypothesis { b: Parity, c: Parity },
    #[error("sample parameters must be nonzero")]
    ZeroSample,
}

/// Parameters `(z, r, s)` of one sample.
pub type Sample = (Rational, Rational, Rational);

#[derive(Clone, Debug, PartialEq)]
pub struct BracketIdentityReport {
    pub parities: (Parity, Parity, Parity),
    pub samples: usize,
    pub status: Status,
    /// The first sample where the sides differ, with their difference.
    pub counterexample: Option<(Sample, Element<Rational>)>,
}

/// The abstract letters `A`, `B`, `C` with the given parities.
pub fn abstract_letters(p: (Parity, Parity, Parity)) -> [Element<Rational>; 3] {
    [
        Element::letter(Letter::abstract_letter(1, p.0)),
        Element::letter(Letter::abstract_letter(2, p.1)),
        Element::letter(Letter::abstract_letter(3, p.2)),
    ]
}

/// Left minus right side at one sample, with no hypothesis check.
pub fn bracket_identity_difference(
    p: (Parity, Parity, Parity),
    sample: &Sample,
) -> Element<Rational> {
    let (z, r, s) = sample;
    let x = z * s;
    let y = z * r;
    let t = &x * r;
    let [a, b, c] = abstract_letters(p);
    let sup = |u: &Element<Rational>, v: &Element<Rational>, w: &Rational| {
        Element::bracket(BracketKind::Super, u, v, w)
    };
    let lhs = sup(
        &a,
        &Element::bracket(BracketKind::Commutator, &b, &c, &x),
        &y,
    );
    let first = sup(&sup(&a, &b, z), &c, &t);
    let sign = Rational::from_integer(p.0.sign_with(p.1).into());
    let second = sup(&b, &sup(&a, &c, r), s).scale(&(sign * z));
    lhs.sub(&first).sub(&second)
}

/// Checks the identity at every sample. Fails when both `B` and `C` are odd.
pub fn verify_bracket_identity(
    p: (Parity, Parity, Parity),
    samples: &[Sample],
) -> Result<BracketIdentityReport, BracketIdentityError> {
    if p.1.is_odd() && p.2.is_odd() {
        return Err(BracketIdentityError::Hypothesis { b: p.1, c: p.2 });
    }
    if samples
        .iter()
        .any(|(z, r, s)| z.is_zero() || r.is_zero() || s.is_zero())
    {
        return Err(BracketIdentityError::ZeroSample);
    }
    let counterexample = samples.iter().find_map(|smp| {
        let d = bracket_identity_difference(p, smp);
        (!d.is_zero()).then(|| (smp.clone(), d))
    });
    let status = if counterexample.is_some() {
        Status::Refuted
    } else {
        Status::Proved
    };
    Ok(BracketIdentityReport {
        parities: p,
        samples: samples.len(),
        status,
        counterexample,
    })
}

/// `z` in `{1, 2, 3}`, `r` and `s` in `{1, 2}`: enough points to pin down a
/// polynomial of the degrees above.
pub fn exact_grid() -> Vec<Sample> {
    let int = |k: i64| Rational::from_integer(k.into());
    let mut v = Vec::new();
    for z in 1..=3 {
        for r in 1..=2 {
            for s in 1..=2 {
                v.push((int(z), int(r), int(s)));
            }
        }
    }
    v
}

/// Every parity triple, hypothesis-satisfying ones first, in a fixed order.
pub fn parity_triples() -> Vec<(Parity, Parity, Parity)> {
    let ps = [Parity::Even, Parity::Odd];
    let mut v = Vec::new();
    for a in ps {
        for b in ps {
            for c in ps {
                v.push((a, b, c));
            }
        }
    }
    v.sort_by_key(|t| t.1.is_odd() && t.2.is_odd());
    v
}
