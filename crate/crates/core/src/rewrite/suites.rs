use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::complete::{CompletionError, CompletionStats};
use super::system::{build_rules, RewriteSystem, RuleError};
use super::verdict::{default_degree_bound, verify_difference, worse_verdict, Status, Verdict};
use crate::dsl::{bind, pretty, Expr};
use crate::presentations::{
    chevalley_from_green, chevalley_presentation, green_image, green_presentation,
    q_index_exponent, substitute_scaled, AlgebraSignature, ConversionError, ScaledElement,
};
use crate::scalars::QScalar;
use crate::superalg::{Element, LetterKind};

/// The identity suites checked by rewriting modulo the Chevalley relations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Suite {
    /// Brackets of single Chevalley generators with Green generators.
    Prop5,
    /// The deformed Green relations with the Green generators written in
    /// Chevalley generators.
    Theorem,
    /// Chevalley generators written in Green generators, then back.
    Roundtrip,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Prop5, Suite::Theorem, Suite::Roundtrip];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop5 => "prop5",
            Suite::Theorem => "theorem",
            Suite::Roundtrip => "roundtrip",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One identity, already expressed in Chevalley generators.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteInstance {
    pub family: String,
    pub name: String,
    /// The identity as written, in the expression language.
    pub statement: String,
    /// Both sides after substitution.
    pub lhs: ScaledElement,
    pub rhs: ScaledElement,
}

impl SuiteInstance {
    /// Longest word on either side.
    pub fn max_word_len(&self) -> usize {
        self.lhs.body.degree().max(self.rhs.body.degree())
    }

    /// `lhs - rhs` with the common `sqrt2` power dropped.
    pub fn difference(&self) -> Result<Element<QScalar>, ConversionError> {
        Ok(self.lhs.sub(&self.rhs)?.body)
    }
}

fn family_of(name: &str) -> String {
    name.split('[').next().unwrap_or(name).to_string()
}

fn instance(
    sig: &AlgebraSignature,
    name: String,
    lhs: &Expr,
    rhs: &Expr,
) -> Result<SuiteInstance, ConversionError> {
    let image = green_image(sig, true);
    let bind_scaled = |e: &Expr| -> Result<ScaledElement, ConversionError> {
        let x = bind(sig, e).map_err(|err| ConversionError::NoImage(format!("{err}")))?;
        substitute_scaled(&x, &image)
    };
    Ok(SuiteInstance {
        family: family_of(&name),
        statement: format!("{} = {}", pretty(lhs), pretty(rhs)),
        lhs: bind_scaled(lhs)?,
        rhs: bind_scaled(rhs)?,
        name,
    })
}

fn gen(kind: LetterKind, i: u16) -> Expr {
    Expr::gen(kind, i)
}

/// Identities between single Chevalley generators and the Green generators,
/// for `i < N` and all `j`.
fn prop5_exprs(sig: &AlgebraSignature) -> Vec<(String, Expr, Expr)> {
    use LetterKind::{AMinus, APlus, KBar, E, F, K};
    let n = sig.rank();
    let qi = |t: u16| q_index_exponent(sig, t);
    let sgn = |t: u16| sig.grading_sign(t);
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..=n {
            let rhs = if i == j {
                gen(K, i).times(gen(APlus, i + 1)).scaled_by(-sgn(i + 1))
            } else {
                Expr::int(0)
            };
            out.push((
                format!("e-aplus[{i},{j}]"),
                Expr::sup(gen(E, i), gen(APlus, j)),
                rhs,
            ));
            let rhs = if i == j {
                gen(AMinus, i + 1).times(gen(KBar, i))
            } else {
                Expr::int(0)
            };
            out.push((
                format!("aminus-f[{i},{j}]"),
                Expr::sup(gen(AMinus, j), gen(F, i)),
                rhs,
            ));
        }
        for j in 1..=n {
            if i + 1 < j || i > j {
                out.push((
                    format!("e-aminus[{i},{j}]"),
                    Expr::sup(gen(E, i), gen(AMinus, j)),
                    Expr::int(0),
                ));
                out.push((
                    format!("aplus-f[{i},{j}]"),
                    Expr::sup(gen(APlus, j), gen(F, i)),
                    Expr::int(0),
                ));
            }
        }
        out.push((
            format!("e-aminus-next[{i}]"),
            Expr::sup_w(gen(E, i), gen(AMinus, i + 1), qi(i)),
            gen(AMinus, i).scaled_by(sgn(i + 1)),
        ));
        out.push((
            format!("e-aminus-same[{i}]"),
            Expr::sup_w(gen(E, i), gen(AMinus, i), -qi(i - 1)),
            Expr::int(0),
        ));
        out.push((
            format!("aplus-f-next[{i}]"),
            Expr::sup_w(gen(APlus, i + 1), gen(F, i), -qi(i)),
            -gen(APlus, i),
        ));
        out.push((
            format!("aplus-f-same[{i}]"),
            Expr::sup_w(gen(APlus, i), gen(F, i), qi(i - 1)),
            Expr::int(0),
        ));
    }
    out
}

/// Every instance of the suite at the signature.
pub fn suite_instances(
    sig: &AlgebraSignature,
    suite: Suite,
) -> Result<Vec<SuiteInstance>, ConversionError> {
    match suite {
        Suite::Prop5 => prop5_exprs(sig)
            .iter()
            .map(|(n, l, r)| instance(sig, n.clone(), l, r))
            .collect(),
        Suite::Theorem => green_presentation(sig, true)
            .relations
            .iter()
            .map(|rel| instance(sig, rel.name.clone(), &rel.lhs, &rel.rhs))
            .collect(),
        Suite::Roundtrip => roundtrip_instances(sig),
    }
}

fn roundtrip_instances(sig: &AlgebraSignature) -> Result<Vec<SuiteInstance>, ConversionError> {
    let image = green_image(sig, true);
    let mut out = Vec::new();
    for kind in [
        LetterKind::K,
        LetterKind::KBar,
        LetterKind::E,
        LetterKind::F,
    ] {
        for i in 1..=sig.rank() {
            let formula = chevalley_from_green(sig, kind, i, true)?;
            let lhs = substitute_scaled(&formula.bind(sig).body, &image)?;
            let lhs = ScaledElement::new(lhs.sqrt2_exp + formula.sqrt2_exp, lhs.body);
            let target = Element::letter(sig.letter(kind, i));
            let name = format!("roundtrip.{}[{i}]", kind.prefix());
            out.push(SuiteInstance {
                family: family_of(&name),
                statement: format!("{formula} = {}{i}", kind.prefix()),
                lhs,
                rhs: ScaledElement::plain(target),
                name,
            });
        }
    }
    Ok(out)
}

/// The suite's default degree bound: twice the longest word plus four.
pub fn suite_degree_bound(instances: &[SuiteInstance]) -> usize {
    default_degree_bound(
        instances
            .iter()
            .map(SuiteInstance::max_word_len)
            .max()
            .unwrap_or(0),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error(transparent)]
    Rules(#[from] RuleError),
    #[error(transparent)]
    Conversion(#[from] ConversionError),
}

/// The deformed Chevalley rules completed up to `degree_bound`. A completion
/// that hits the rule ceiling leaves the system usable but unclosed, so its
/// verdicts are never `Refuted`.
pub fn chevalley_system(
    sig: &AlgebraSignature,
    degree_bound: usize,
    max_rules: usize,
) -> Result<
    (
        RewriteSystem<QScalar>,
        Result<CompletionStats, CompletionError>,
    ),
    RuleError,
> {
    let mut rs = build_rules(&chevalley_presentation(sig, true), degree_bound)?;
    let stats = rs.complete(max_rules);
    Ok((rs, stats))
}

/// The verdict of one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceResult {
    pub family: String,
    pub name: String,
    pub statement: String,
    pub verdict: Verdict<QScalar>,
}

/// Checks `lhs = rhs` between `sqrt2`-scaled sides. Sides whose exponents
/// differ in parity lie in independent `sqrt2`-components over `Q(q)`, so the
/// identity holds iff both sides vanish, and each is reduced on its own.
pub fn verify_scaled(
    lhs: &ScaledElement,
    rhs: &ScaledElement,
    rs: &RewriteSystem<QScalar>,
) -> Verdict<QScalar> {
    if let Ok(d) = lhs.sub(rhs) {
        return verify_difference(&d.body, rs);
    }
    worse_verdict(
        verify_difference(&lhs.body, rs),
        verify_difference(&rhs.body, rs),
    )
}

pub fn check_suite_instance(inst: &SuiteInstance, rs: &RewriteSystem<QScalar>) -> InstanceResult {
    InstanceResult {
        family: inst.family.clone(),
        name: inst.name.clone(),
        statement: inst.statement.clone(),
        verdict: verify_scaled(&inst.lhs, &inst.rhs, rs),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub signature: AlgebraSignature,
    pub degree_bound: usize,
    pub results: Vec<InstanceResult>,
}

impl SuiteReport {
    pub fn count(&self, s: Status) -> usize {
        self.results
            .iter()
            .filter(|r| r.verdict.status == s)
            .count()
    }

    /// `Refuted` if anything is refuted, else `Inconclusive` if anything is,
    /// else `Proved`.
    pub fn status(&self) -> Status {
        self.results
            .iter()
            .map(|r| r.verdict.status)
            .fold(Status::Proved, |a, b| match (a, b) {
                (Status::Refuted, _) | (_, Status::Refuted) => Status::Refuted,
                (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
                _ => Status::Proved,
            })
    }
}

/// Builds, completes and checks a whole suite sequentially. `degree_bound`
/// defaults to [`suite_degree_bound`].
pub fn verify_suite(
    sig: &AlgebraSignature,
    suite: Suite,
    degree_bound: Option<usize>,
    max_rules: usize,
) -> Result<SuiteReport, SuiteError> {
    let instances = suite_instances(sig, suite)?;
    let bound = degree_bound.unwrap_or_else(|| suite_degree_bound(&instances));
    let (rs, _) = chevalley_system(sig, bound, max_rules)?;
    let results = instances
        .iter()
        .map(|i| check_suite_instance(i, &rs))
        .collect();
    Ok(SuiteReport {
        suite,
        signature: *sig,
        degree_bound: bound,
        results,
    })
}
