use num_bigint::BigInt;
use proptest::prelude::*;

use osp_core::scalars::{parse_rational, LaurentPoly, QScalar, Rational, ScalarError, Sqrt2Scalar};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..3, prop::collection::vec(-4i64..5, 0..4)).prop_map(|(low, cs)| {
        LaurentPoly::from_coeffs(low, cs.into_iter().map(BigInt::from).collect())
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn qscalar() -> impl Strategy<Value = QScalar> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| QScalar::from_parts(n, d).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn sqrt2() -> impl Strategy<Value = Sqrt2Scalar> {
    (rational(), rational()).prop_map(|(a, b)| Sqrt2Scalar::new(a, b))
}

proptest! {
    #[test]
    fn field_axioms(a in qscalar(), b in qscalar(), c in qscalar()) {
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul_ref(&a.inv().unwrap()).is_one());
        } else {
            prop_assert_eq!(a.inv(), Err(ScalarError::DivisionByZero));
        }
    }

    #[test]
    fn canonical_form_ignores_common_factors(n in laurent(), d in nonzero_laurent(), g in nonzero_laurent()) {
        let plain = QScalar::from_parts(n.clone(), d.clone()).unwrap();
        let padded = QScalar::from_parts(n.mul(&g), d.mul(&g)).unwrap();
        prop_assert_eq!(&plain, &padded);
        let den = plain.denominator();
        prop_assert!(den.low() == 0 && den.leading_coeff().unwrap() > &BigInt::from(0));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in qscalar(), b in qscalar(), q0 in rational()) {
        prop_assume!(q0 != Rational::from_integer(0.into()));
        if let (Ok(x), Ok(y)) = (a.eval(&q0), b.eval(&q0)) {
            prop_assert_eq!(a.add_ref(&b).eval(&q0).unwrap(), &x + &y);
            prop_assert_eq!(a.mul_ref(&b).eval(&q0).unwrap(), &x * &y);
        }
    }

    #[test]
    fn sqrt2_conjugation_and_norm(x in sqrt2(), y in sqrt2()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert_eq!(&x * &x.conj(), Sqrt2Scalar::from_rational(x.norm()));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), Sqrt2Scalar::one());
        }
    }

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&r.to_string()), Some(r));
    }
}

#[test]
fn q_minus_qbar_is_canonical() {
    let d = QScalar::q().sub_ref(&QScalar::qbar());
    assert_eq!(d.to_string(), "q - q^-1");
    let x = QScalar::one().div_ref(&d).unwrap();
    assert_eq!(x.numerator(), &LaurentPoly::monomial(1.into(), 1));
    assert_eq!(
        x.denominator(),
        &LaurentPoly::from_coeffs(0, vec![(-1).into(), 0.into(), 1.into()])
    );
}

#[test]
fn poles_are_reported() {
    let x = QScalar::one()
        .div_ref(&QScalar::q().sub_ref(&QScalar::qbar()))
        .unwrap();
    let one = Rational::from_integer(1.into());
    assert!(matches!(x.eval(&one), Err(ScalarError::Pole { .. })));
    assert_eq!(
        x.eval(&Rational::from_integer(2.into())).unwrap(),
        rat(2, 3)
    );
}

#[test]
fn sqrt2_powers() {
    assert_eq!(Sqrt2Scalar::sqrt2_pow(2), Sqrt2Scalar::from_int(2));
    assert_eq!(
        Sqrt2Scalar::sqrt2_pow(-1),
        Sqrt2Scalar::new(rat(0, 1), rat(1, 2))
    );
    assert_eq!(
        Sqrt2Scalar::sqrt2() * Sqrt2Scalar::sqrt2_pow(-3),
        Sqrt2Scalar::new(rat(1, 2), rat(0, 1))
    );
}
