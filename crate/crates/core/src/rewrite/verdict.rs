use core::fmt;

use super::system::RewriteSystem;
use crate::scalars::Coefficient;
use crate::superalg::Element;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Status {
    Proved,
    Refuted,
    Inconclusive,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Proved => "proved",
            Status::Refuted => "refuted",
            Status::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of checking `lhs = rhs` modulo the rules.
///
/// `Proved` means the difference reduced to zero. `Refuted` means it reduced
/// to the nonzero `witness` and normal forms are unique at its degree.
/// `Inconclusive` keeps the nonzero residual but makes no claim: either the
/// input exceeded the degree bound or the rules are not known to be
/// confluent that far.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<C> {
    pub status: Status,
    pub witness: Option<Element<C>>,
    pub residual: Option<Element<C>>,
    pub bound_used: usize,
    pub reduction_steps: usize,
}

impl<C: Coefficient> Verdict<C> {
    pub fn is_proved(&self) -> bool {
        self.status == Status::Proved
    }
}

/// `2 * (longest word) + 4`.
pub fn default_degree_bound(max_word_len: usize) -> usize {
    2 * max_word_len + 4
}

/// Reduces `lhs - rhs`.
pub fn verify_identity<C: Coefficient>(
    lhs: &Element<C>,
    rhs: &Element<C>,
    rs: &RewriteSystem<C>,
) -> Verdict<C> {
    verify_difference(&lhs.sub(rhs), rs)
}

/// Reduces a difference that should vanish.
pub fn verify_difference<C: Coefficient>(x: &Element<C>, rs: &RewriteSystem<C>) -> Verdict<C> {
    let red = rs.reduce(x);
    let bound_used = rs.degree_bound();
    let reduction_steps = red.steps;
    if red.result.is_zero() {
        return Verdict {
            status: Status::Proved,
            witness: None,
            residual: None,
            bound_used,
            reduction_steps,
        };
    }
    if !red.bound_hit && rs.confluent_to(x.degree()) {
        return Verdict {
            status: Status::Refuted,
            witness: Some(red.result),
            residual: None,
            bound_used,
            reduction_steps,
        };
    }
    Verdict {
        status: Status::Inconclusive,
        witness: None,
        residual: Some(red.result),
        bound_used,
        reduction_steps,
    }
}

/// The less favourable of two verdicts on independent parts of one
/// identity (refuted over inconclusive over proved), with steps summed.
pub fn worse_verdict<C: Coefficient>(a: Verdict<C>, b: Verdict<C>) -> Verdict<C> {
    let rank = |s: Status| match s {
        Status::Proved => 0,
        Status::Inconclusive => 1,
        Status::Refuted => 2,
    };
    let steps = a.reduction_steps + b.reduction_steps;
    let w = if rank(b.status) > rank(a.status) {
        b
    } else {
        a
    };
    Verdict {
        reduction_steps: steps,
        ..w
    }
}
