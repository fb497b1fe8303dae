//! Oriented rewriting modulo the deformed Chevalley relations: rules,
//! normal forms, degree-bounded completion and identity checks.

mod bracket_identity;
mod complete;
mod converse;
mod mutation;
mod suites;
mod system;
mod verdict;

pub use bracket_identity::{
    abstract_letters, bracket_identity_difference, exact_grid, parity_triples,
    verify_bracket_identity, BracketIdentityError, BracketIdentityReport, Sample,
};
pub use complete::{CompletionError, CompletionStats, DEFAULT_MAX_RULES};
pub use converse::{green_system, verify_converse, ConverseReport};
pub use mutation::{constant_perturbations, Perturbation};
pub use suites::{
    check_suite_instance, chevalley_system, suite_degree_bound, suite_instances, verify_scaled,
    verify_suite, InstanceResult, Suite, SuiteError, SuiteInstance, SuiteReport,
};
pub use system::{
    build_rules, Reduction, RewriteRule, RewriteSystem, RuleError, Strategy, TraceStep,
};
pub use verdict::{
    default_degree_bound, verify_difference, verify_identity, worse_verdict, Status, Verdict,
};
