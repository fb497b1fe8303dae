//! Experimental: the deformed Green relations as the rewriting system and
//! the Chevalley relations, rewritten in Green generators, as the targets.
//! Nothing guarantees the completion closes, so `Inconclusive` is common.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::complete::{CompletionError, CompletionStats};
use super::suites::{InstanceResult, SuiteError};
use super::system::{RewriteSystem, RuleError};
use super::verdict::{default_degree_bound, verify_difference};
use crate::presentations::{
    chevalley_image, chevalley_presentation, green_presentation, substitute_scaled,
    AlgebraSignature,
};
use crate::scalars::QScalar;

/// Green relations oriented in the letter order `Lb < L < a- < a+`.
pub fn green_system(
    sig: &AlgebraSignature,
    degree_bound: usize,
) -> Result<RewriteSystem<QScalar>, RuleError> {
    let p = green_presentation(sig, true);
    RewriteSystem::from_relations(
        p.relations
            .iter()
            .map(|r| (r.name.as_str(), r.element.clone())),
        degree_bound,
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConverseReport {
    pub signature: AlgebraSignature,
    pub degree_bound: usize,
    pub rules: usize,
    /// Normal forms modulo the Green rules are unique up to this length.
    pub closed_to: Option<usize>,
    pub completion: Result<CompletionStats, CompletionError>,
    pub results: Vec<InstanceResult>,
}

/// Checks every deformed Chevalley relation with `k`, `e`, `f` replaced by
/// their expressions in Green generators. `degree_bound` defaults to twice
/// the longest substituted word plus four.
pub fn verify_converse(
    sig: &AlgebraSignature,
    degree_bound: Option<usize>,
    max_rules: usize,
) -> Result<ConverseReport, SuiteError> {
    let image = chevalley_image(sig, true);
    let rels = chevalley_presentation(sig, true).relations;
    let targets = rels
        .iter()
        .map(|rel| substitute_scaled(&rel.element, &image))
        .collect::<Result<Vec<_>, _>>()?;
    let longest = targets.iter().map(|x| x.body.degree()).max().unwrap_or(0);
    let degree_bound = degree_bound.unwrap_or_else(|| default_degree_bound(longest));
    let mut rs = green_system(sig, degree_bound)?;
    let completion = rs.complete(max_rules);
    let results = rels
        .iter()
        .zip(&targets)
        .map(|(rel, x)| InstanceResult {
            family: rel.name.split('[').next().unwrap_or(&rel.name).to_string(),
            name: rel.name.clone(),
            statement: rel.text(),
            verdict: verify_difference(&x.body, &rs),
        })
        .collect();
    Ok(ConverseReport {
        signature: *sig,
        degree_bound,
        rules: rs.len(),
        closed_to: rs.closed_to(),
        completion,
        results,
    })
}
