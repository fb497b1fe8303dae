use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::presentations::{Presentation, PresentationKind};
use crate::scalars::{Coefficient, QScalar};
use crate::superalg::{Element, Letter, Word};

/// An oriented rule `lhs -> rhs`. Every word of `rhs` is smaller than `lhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule<C> {
    pub lhs: Word,
    pub rhs: Element<C>,
    /// Name of the relation the rule came from, or of the overlap that
    /// produced it during completion.
    pub origin: String,
}

impl<C: Coefficient> fmt::Display for RewriteRule<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}  [{}]", self.lhs, self.rhs, self.origin)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("rules are built from the deformed Chevalley presentation, not {0}")]
    WrongPresentation(String),
    #[error("relation {relation}: leading word {word} is too short to orient")]
    Unorientable { relation: String, word: String },
    #[error(
        "relation {relation} mixes parities: {word} has a different parity from its leading word"
    )]
    Inhomogeneous { relation: String, word: String },
}

#[derive(Clone, Debug)]
pub(crate) struct RuleBody<C> {
    pub(crate) rhs: Element<C>,
    pub(crate) origin: String,
}

/// A set of oriented rules, keyed by left-hand side.
///
/// `closed_to` is `Some(d)` once every overlap of total length at most `d`
/// has been resolved; `complete` additionally records that no overlap of any
/// length was left unresolved.
#[derive(Clone, Debug)]
pub struct RewriteSystem<C> {
    pub(crate) rules: BTreeMap<Vec<Letter>, RuleBody<C>>,
    pub(crate) max_lhs: usize,
    pub(crate) degree_bound: usize,
    pub(crate) closed_to: Option<usize>,
    pub(crate) complete: bool,
}

/// One rewrite step: the word, where the rule fired, and which rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub word: Word,
    pub position: usize,
    pub rule: Word,
    pub origin: String,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} @{}: {} [{}]",
            self.word, self.position, self.rule, self.origin
        )
    }
}

/// Result of reducing an element.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction<C> {
    pub result: Element<C>,
    pub steps: usize,
    /// Some input word was longer than the degree bound and was left as is.
    pub bound_hit: bool,
    pub trace: Vec<TraceStep>,
}

/// Which match to rewrite when a word has several.
pub enum Strategy<'a> {
    /// The leftmost match, shortest rule first.
    Leftmost,
    /// `choose(k)` picks one of `k` matches listed left to right.
    Choose(&'a mut dyn FnMut(usize) -> usize),
}

impl<C: Coefficient> RewriteSystem<C> {
    pub fn new(degree_bound: usize) -> Self {
        RewriteSystem {
            rules: BTreeMap::new(),
            max_lhs: 0,
            degree_bound,
            closed_to: None,
            complete: false,
        }
    }

    /// Orients each relation in turn (see [`add_relation`](Self::add_relation)).
    pub fn from_relations<'a>(
        relations: impl IntoIterator<Item = (&'a str, Element<C>)>,
        degree_bound: usize,
    ) -> Result<Self, RuleError> {
        let mut rs = Self::new(degree_bound);
        for (name, x) in relations {
            rs.add_relation(name, &x)?;
        }
        rs.interreduce();
        Ok(rs)
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn set_degree_bound(&mut self, d: usize) {
        self.degree_bound = d;
    }

    pub fn closed_to(&self) -> Option<usize> {
        if self.complete {
            Some(usize::MAX)
        } else {
            self.closed_to
        }
    }

    /// No overlap of any length is unresolved: normal forms are unique.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Whether normal forms of words up to length `d` are unique.
    pub fn confluent_to(&self, d: usize) -> bool {
        self.closed_to().is_some_and(|c| c >= d)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// The rules in word order of their left-hand sides.
    pub fn rules(&self) -> Vec<RewriteRule<C>> {
        let mut v: Vec<RewriteRule<C>> = self
            .rules
            .iter()
            .map(|(l, b)| RewriteRule {
                lhs: Word::new(l.clone()),
                rhs: b.rhs.clone(),
                origin: b.origin.clone(),
            })
            .collect();
        v.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        v
    }

    pub fn rule(&self, lhs: &[Letter]) -> Option<RewriteRule<C>> {
        self.rules.get(lhs).map(|b| RewriteRule {
            lhs: Word::new(lhs.to_vec()),
            rhs: b.rhs.clone(),
            origin: b.origin.clone(),
        })
    }

    /// Reduces `x`, orients what is left by its leading word and adds it as
    /// a rule. Returns `false` when `x` reduces to zero.
    pub fn add_relation(&mut self, name: &str, x: &Element<C>) -> Result<bool, RuleError> {
        let r = self.reduce(x).result;
        let Some((lead, c)) = r.leading().map(|(w, c)| (w.clone(), c.clone())) else {
            return Ok(false);
        };
        if lead.len() < 2 {
            return Err(RuleError::Unorientable {
                relation: name.into(),
                word: alloc::format!("{lead}"),
            });
        }
        if let Some((w, _)) = r.terms().find(|(w, _)| w.parity() != lead.parity()) {
            return Err(RuleError::Inhomogeneous {
                relation: name.into(),
                word: alloc::format!("{w}"),
            });
        }
        let inv = c.recip().expect("leading coefficient is nonzero").negated();
        let mut rhs = Element::zero();
        for (w, v) in r.terms() {
            if *w != lead {
                rhs.add_term(w.clone(), &v.times(&inv));
            }
        }
        self.insert(lead.into_letters(), rhs, name.into());
        self.complete = false;
        self.closed_to = None;
        Ok(true)
    }

    pub(crate) fn insert(&mut self, lhs: Vec<Letter>, rhs: Element<C>, origin: String) {
        self.max_lhs = self.max_lhs.max(lhs.len());
        self.rules.insert(lhs, RuleBody { rhs, origin });
    }

    pub(crate) fn remove(&mut self, lhs: &[Letter]) -> Option<RuleBody<C>> {
        self.rules.remove(lhs)
    }

    /// All `(position, lhs length)` where some rule matches `w`, left to
    /// right and shortest first.
    pub fn matches(&self, w: &[Letter]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..w.len() {
            for l in 2..=self.max_lhs.min(w.len() - p) {
                if self.rules.contains_key(&w[p..p + l]) {
                    out.push((p, l));
                }
            }
        }
        out
    }

    fn first_match(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for p in 0..w.len() {
            for l in 2..=self.max_lhs.min(w.len() - p) {
                if self.rules.contains_key(&w[p..p + l]) {
                    return Some((p, l));
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, w: &[Letter]) -> bool {
        self.first_match(w).is_some()
    }

    pub fn reduce(&self, x: &Element<C>) -> Reduction<C> {
        self.reduce_with(x, Strategy::Leftmost, false)
    }

    pub fn reduce_traced(&self, x: &Element<C>) -> Reduction<C> {
        self.reduce_with(x, Strategy::Leftmost, true)
    }

    /// Rewrites the leading word until none is reducible. Words longer than
    /// the degree bound are passed through and flagged.
    pub fn reduce_with(
        &self,
        x: &Element<C>,
        mut strategy: Strategy<'_>,
        trace: bool,
    ) -> Reduction<C> {
        let mut pending = x.clone();
        let mut result = Element::zero();
        let mut steps = 0;
        let mut bound_hit = false;
        let mut log = Vec::new();
        while let Some((w, c)) = pending.pop_leading() {
            if w.len() > self.degree_bound {
                bound_hit = true;
                result.add_term(w, &c);
                continue;
            }
            let hit = match &mut strategy {
                Strategy::Leftmost => self.first_match(&w),
                Strategy::Choose(choose) => {
                    let all = self.matches(&w);
                    if all.is_empty() {
                        None
                    } else {
                        Some(all[choose(all.len()) % all.len()])
                    }
                }
            };
            let Some((p, l)) = hit else {
                result.add_term(w, &c);
                continue;
            };
            let body = &self.rules[&w[p..p + l]];
            steps += 1;
            if trace {
                log.push(TraceStep {
                    word: w.clone(),
                    position: p,
                    rule: Word::new(w[p..p + l].to_vec()),
                    origin: body.origin.clone(),
                });
            }
            for (u, d) in body.rhs.terms() {
                pending.add_term(Word::splice(&w[..p], u, &w[p + l..]), &c.times(d));
            }
        }
        Reduction {
            result,
            steps,
            bound_hit,
            trace: log,
        }
    }

    /// Makes every left-hand side irreducible by the other rules and every
    /// right-hand side fully reduced.
    pub fn interreduce(&mut self) {
        loop {
            let mut changed = false;
            let keys: Vec<Vec<Letter>> = self.rules.keys().cloned().collect();
            for lhs in keys {
                let Some(body) = self.remove(&lhs) else {
                    continue;
                };
                if self.is_reducible(&lhs) {
                    let x = Element::word(Word::new(lhs.clone())).sub(&body.rhs);
                    // A relation that already follows from the others is dropped.
                    let _ = self.add_relation(&body.origin, &x);
                    changed = true;
                } else {
                    let rhs = self.reduce(&body.rhs).result;
                    self.insert(lhs, rhs, body.origin);
                }
            }
            self.max_lhs = self.rules.keys().map(Vec::len).max().unwrap_or(0);
            if !changed {
                break;
            }
        }
    }

    /// Coefficient change, e.g. specializing `q` to a number.
    pub fn map_coeffs<D: Coefficient, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
    ) -> Result<RewriteSystem<D>, E> {
        let mut rules = BTreeMap::new();
        for (l, b) in &self.rules {
            rules.insert(
                l.clone(),
                RuleBody {
                    rhs: b.rhs.map_coeffs(&mut f)?,
                    origin: b.origin.clone(),
                },
            );
        }
        Ok(RewriteSystem {
            rules,
            max_lhs: self.max_lhs,
            degree_bound: self.degree_bound,
            closed_to: self.closed_to,
            complete: self.complete,
        })
    }
}

/// Rules from the deformed Chevalley presentation: Cartan-Kac relations
/// first, then the Serre relations, each oriented by its leading word, then
/// inter-reduced. Not yet completed.
pub fn build_rules(
    p: &Presentation,
    degree_bound: usize,
) -> Result<RewriteSystem<QScalar>, RuleError> {
    check_presentation(p)?;
    RewriteSystem::from_relations(
        p.relations
            .iter()
            .map(|r| (r.name.as_str(), r.element.clone())),
        degree_bound,
    )
}

pub(crate) fn check_presentation(p: &Presentation) -> Result<(), RuleError> {
    if p.kind != PresentationKind::Chevalley || !p.deformed {
        let what = alloc::format!("{} (deformed: {})", p.kind.name(), p.deformed);
        return Err(RuleError::WrongPresentation(what));
    }
    Ok(())
}
