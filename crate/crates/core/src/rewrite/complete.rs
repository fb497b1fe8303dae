use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::system::RewriteSystem;
use crate::scalars::Coefficient;
use crate::superalg::{Element, Letter, Word};

/// Default ceiling on the number of rules during completion.
pub const DEFAULT_MAX_RULES: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CompletionError {
    #[error("rule ceiling {limit} reached while resolving the overlap of {left} and {right}")]
    RuleCeiling {
        limit: usize,
        left: String,
        right: String,
    },
}

/// What a completion run did.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub rounds: usize,
    pub overlaps_resolved: usize,
    pub rules_added: usize,
    /// Overlaps longer than the bound that were not examined.
    pub overlaps_skipped: usize,
}

/// `(overlap length, left lhs, right lhs, shared length)`.
type Overlap = (usize, Vec<Letter>, Vec<Letter>, usize);

impl<C: Coefficient> RewriteSystem<C> {
    /// Resolves every overlap `u v w` of two left-hand sides `u v`, `v w`
    /// with `|u v w| <= degree_bound`, adding the nonzero differences as new
    /// rules and inter-reducing, until nothing new appears.
    pub fn complete(&mut self, max_rules: usize) -> Result<CompletionStats, CompletionError> {
        let bound = self.degree_bound;
        let mut stats = CompletionStats::default();
        let mut done: BTreeSet<(Vec<Letter>, Vec<Letter>, usize)> = BTreeSet::new();
        loop {
            stats.rounds += 1;
            let (mut pending, skipped) = self.overlaps(bound, &done);
            stats.overlaps_skipped = skipped;
            if pending.is_empty() {
                break;
            }
            pending.sort();
            let mut added = false;
            for (_, l1, l2, k) in pending {
                done.insert((l1.clone(), l2.clone(), k));
                let (Some(b1), Some(b2)) = (self.rules.get(&l1), self.rules.get(&l2)) else {
                    continue;
                };
                stats.overlaps_resolved += 1;
                let left = b1.rhs.mul(&Element::word(Word::new(l2[k..].to_vec())));
                let right = Element::word(Word::new(l1[..l1.len() - k].to_vec())).mul(&b2.rhs);
                let d = self.reduce(&left.sub(&right)).result;
                if d.is_zero() {
                    continue;
                }
                if self.rules.len() >= max_rules {
                    return Err(CompletionError::RuleCeiling {
                        limit: max_rules,
                        left: format!("{}", Word::new(l1)),
                        right: format!("{}", Word::new(l2)),
                    });
                }
                let origin = format!(
                    "overlap({},{})",
                    Word::new(l1.clone()),
                    Word::new(l2.clone())
                );
                // Orientation cannot fail here: overlap differences are
                // homogeneous and have length at least two.
                if self.add_relation(&origin, &d).unwrap_or(false) {
                    stats.rules_added += 1;
                    added = true;
                }
            }
            self.interreduce();
            if !added {
                break;
            }
        }
        let (rest, skipped) = self.overlaps(bound, &done);
        debug_assert!(rest.is_empty());
        stats.overlaps_skipped = skipped;
        self.closed_to = Some(bound);
        self.complete = skipped == 0;
        Ok(stats)
    }

    /// Unresolved overlaps within the bound, and the number beyond it.
    fn overlaps(
        &self,
        bound: usize,
        done: &BTreeSet<(Vec<Letter>, Vec<Letter>, usize)>,
    ) -> (Vec<Overlap>, usize) {
        let mut out = Vec::new();
        let mut skipped = 0;
        let lhss: Vec<&Vec<Letter>> = self.rules.keys().collect();
        for l1 in &lhss {
            for l2 in &lhss {
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let len = l1.len() + l2.len() - k;
                    if len > bound {
                        skipped += 1;
                    } else if !done.contains(&((*l1).clone(), (*l2).clone(), k)) {
                        out.push((len, (*l1).clone(), (*l2).clone(), k));
                    }
                }
            }
        }
        (out, skipped)
    }
}
