use proptest::prelude::*;

use osp_core::dsl::{bind, parse, parse_element, pretty, BindError, Expr, Weight};
use osp_core::presentations::{
    chevalley_presentation, green_presentation, preoscillator_presentation, AlgebraSignature,
};
use osp_core::superalg::BracketKind;
use osp_core::{Element, Letter, LetterKind, Parity, QScalar};

const CORPUS: &str = include_str!("data/dsl_corpus.tsv");

fn sig(m: u16, n: u16) -> AlgebraSignature {
    AlgebraSignature::new(m, n).unwrap()
}

#[test]
fn corpus_renders_canonically_and_round_trips() {
    let mut lines = 0;
    for line in CORPUS.lines().filter(|l| !l.trim().is_empty()) {
        let (input, canonical) = line.split_once('\t').expect("tab-separated line");
        let e = parse(input).unwrap_or_else(|err| panic!("{input}: {err}"));
        assert_eq!(pretty(&e), canonical, "{input}");
        assert_eq!(parse(canonical).unwrap(), e, "{canonical}");
        lines += 1;
    }
    assert!(lines > 1000);
}

#[test]
fn every_presentation_relation_round_trips() {
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)] {
        let s = sig(m, n);
        let ps = [
            chevalley_presentation(&s, true),
            chevalley_presentation(&s, false),
            green_presentation(&s, true),
            green_presentation(&s, false),
            preoscillator_presentation(&s),
        ];
        for p in ps {
            for r in &p.relations {
                for e in [&r.lhs, &r.rhs] {
                    assert_eq!(&parse(&pretty(e)).unwrap(), e, "{}", r.name);
                }
            }
        }
    }
}

#[test]
fn binding_examples() {
    let s = sig(1, 1);
    let am = Element::letter(s.letter(LetterKind::AMinus, 1));
    let ap = Element::letter(s.letter(LetterKind::APlus, 1));
    // Both a1 letters are odd at m = 1, so the super bracket is an anticommutator.
    assert_eq!(
        parse_element(&s, "[[a-1,a+1]]").unwrap(),
        am.mul(&ap).add(&ap.mul(&am))
    );
    let w = parse_element(&s, "k1*kb1").unwrap();
    assert_eq!(w, Element::monomial(&[s.k(1), s.kbar(1)]));
    match parse_element(&s, "e3") {
        Err(osp_core::dsl::DslError::Bind(BindError::IndexOutOfRange { generator, max })) => {
            assert_eq!((generator.as_str(), max), ("e3", 2));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn bind_rejects_bad_divisors_and_weights() {
    let s = sig(1, 1);
    assert!(matches!(
        parse_element(&s, "e1/f1"),
        Err(osp_core::dsl::DslError::Bind(BindError::NonScalarDivisor(
            _
        )))
    ));
    assert!(matches!(
        parse_element(&s, "e1/(q - q)"),
        Err(osp_core::dsl::DslError::Bind(BindError::ZeroDivisor(_)))
    ));
}

fn gen_expr() -> impl Strategy<Value = Expr> {
    let kinds = [
        LetterKind::E,
        LetterKind::F,
        LetterKind::K,
        LetterKind::KBar,
        LetterKind::L,
        LetterKind::AMinus,
        LetterKind::APlus,
    ];
    let leaf = prop_oneof![
        3 => (0usize..kinds.len(), 1u16..=3).prop_map(move |(k, i)| Expr::gen(kinds[k], i)),
        1 => (-3i64..=3).prop_map(Expr::int),
        1 => (-2i64..=2).prop_map(Expr::q_pow),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.plus(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.minus(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.times(b)),
            inner.clone().prop_map(|e| -e),
            (inner.clone(), inner.clone(), 0usize..3, -2i64..=2).prop_map(|(a, b, k, w)| {
                let kind = [
                    BracketKind::Commutator,
                    BracketKind::Anticommutator,
                    BracketKind::Super,
                ][k];
                let weight = if w == 0 {
                    Weight::One
                } else {
                    Weight::q_pow(w)
                };
                Expr::bracket(kind, a, b, weight)
            }),
        ]
    })
}

proptest! {
    #[test]
    fn pretty_then_parse_is_identity(e in gen_expr()) {
        prop_assert_eq!(parse(&pretty(&e)).unwrap(), e);
    }

    #[test]
    fn bind_is_linear(a in gen_expr(), b in gen_expr(), c in -3i64..=3) {
        let s = sig(1, 2);
        let x = bind(&s, &a).unwrap();
        let y = bind(&s, &b).unwrap();
        prop_assert_eq!(bind(&s, &a.clone().plus(b.clone())).unwrap(), x.add(&y));
        prop_assert_eq!(bind(&s, &a.clone().minus(b.clone())).unwrap(), x.sub(&y));
        prop_assert_eq!(bind(&s, &Expr::int(c).times(a.clone())).unwrap(), x.scale(&QScalar::from_int(c)));
        // Pretty-printed text binds to the same element.
        let text = format!("{} + {}", pretty(&a), pretty(&b));
        prop_assert_eq!(parse_element(&s, &text).unwrap(), x.add(&y));
    }
}

#[test]
fn abstract_letters_carry_their_parity() {
    let s = sig(1, 1);
    let x = parse_element(&s, "[[x1, y2]]").unwrap();
    // x letters are even, y letters odd.
    let a = Element::letter(Letter::abstract_letter(1, Parity::Even));
    let b = Element::letter(Letter::abstract_letter(2, Parity::Odd));
    assert_eq!(x, Element::supercommutator(&a, &b));
}
