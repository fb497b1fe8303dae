use std::sync::OnceLock;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use osp_core::presentations::AlgebraSignature;
use osp_core::rewrite::{
    chevalley_system, suite_instances, verify_scaled, RewriteSystem, Strategy as Pick, Suite,
    DEFAULT_MAX_RULES,
};
use osp_core::{Element, Letter, QScalar, Word};

const BOUND: usize = 10;

fn sig() -> AlgebraSignature {
    AlgebraSignature::new(1, 1).unwrap()
}

fn system() -> &'static RewriteSystem<QScalar> {
    static RS: OnceLock<RewriteSystem<QScalar>> = OnceLock::new();
    RS.get_or_init(|| {
        let (rs, stats) = chevalley_system(&sig(), BOUND, DEFAULT_MAX_RULES).unwrap();
        stats.unwrap();
        rs
    })
}

fn alphabet() -> Vec<Letter> {
    let s = sig();
    (1..=2)
        .flat_map(|i| [s.e(i), s.f(i), s.k(i), s.kbar(i)])
        .collect()
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    let letters = alphabet();
    prop::collection::vec(0..letters.len(), 0..=max)
        .prop_map(move |ix| Word::new(ix.into_iter().map(|i| letters[i]).collect()))
}

fn scalar() -> impl Strategy<Value = QScalar> {
    (-3i64..=3, -2i64..=2).prop_map(|(c, k)| QScalar::from_int(c).mul_ref(&QScalar::q_pow(k)))
}

fn element(max: usize) -> impl Strategy<Value = Element<QScalar>> {
    prop::collection::vec((word(max), scalar()), 1..=3).prop_map(Element::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Normal forms do not depend on which redex fires or in which order
    /// terms are reduced.
    #[test]
    fn normal_forms_are_order_independent(x in element(BOUND), seed in any::<u64>()) {
        let rs = system();
        let base = rs.reduce(&x);
        prop_assert!(!base.bound_hit);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut choose = |n: usize| rng.random_range(0..n);
        let random = rs.reduce_with(&x, Pick::Choose(&mut choose), false);
        prop_assert_eq!(&random.result, &base.result);
        let mut by_term = Element::zero();
        let mut terms: Vec<_> = x.terms().map(|(w, c)| Element::term(w.clone(), c.clone())).collect();
        terms.reverse();
        for t in &terms {
            by_term = by_term.add(&rs.reduce(t).result);
        }
        prop_assert_eq!(by_term, base.result);
    }

    /// One rewrite step only produces words below the word it fired on,
    /// with the same parity.
    #[test]
    fn single_steps_decrease_the_order(w in word(6)) {
        let rs = system();
        for (pos, len) in rs.matches(w.letters()) {
            let l = w.letters();
            let rule = rs.rule(&l[pos..pos + len]).unwrap();
            for (mid, _) in rule.rhs.terms() {
                let out = Word::splice(&l[..pos], mid.letters(), &l[pos + len..]);
                prop_assert!(out < w, "{} -> {}", w, out);
                prop_assert_eq!(out.parity(), w.parity());
            }
        }
    }

    /// Normal forms are irreducible and preserve parity components.
    #[test]
    fn normal_forms_are_irreducible(x in element(8)) {
        let rs = system();
        let nf = rs.reduce(&x).result;
        for (w, _) in nf.terms() {
            prop_assert!(!rs.is_reducible(w.letters()), "{}", w);
        }
        let (even, odd) = x.homogeneous_parts();
        let (ne, no) = nf.homogeneous_parts();
        prop_assert_eq!(rs.reduce(&even).result, ne);
        prop_assert_eq!(rs.reduce(&odd).result, no);
    }
}

#[test]
fn proved_verdicts_persist_at_larger_bounds() {
    let s = sig();
    let insts = suite_instances(&s, Suite::Theorem).unwrap();
    let mut proved_before: Option<Vec<bool>> = None;
    for bound in [14, 16, 18] {
        let (rs, _) = chevalley_system(&s, bound, DEFAULT_MAX_RULES).unwrap();
        let proved: Vec<bool> = insts
            .iter()
            .map(|i| verify_scaled(&i.lhs, &i.rhs, &rs).is_proved())
            .collect();
        if let Some(before) = &proved_before {
            for (a, b) in std::iter::zip(before, &proved) {
                assert!(!a || *b);
            }
        }
        proved_before = Some(proved);
    }
}
