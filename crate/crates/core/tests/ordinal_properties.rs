mod common;

use std::cmp::Ordering;

use common::arb_ordinal;
use proptest::prelude::*;
use welter_core::ordinal::{sample_below, serde_str};
use welter_core::{nim_sum_ord, BigUint, Ordinal};

proptest! {
    #[test]
    fn text_round_trip(a in arb_ordinal()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in arb_ordinal()) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Ordinal>(&json).unwrap(), a);
    }

    #[test]
    fn order_is_total(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        if !a.is_zero() {
            prop_assert_eq!(a.cmp(&Ordinal::zero()), Ordering::Greater);
        }
    }

    #[test]
    fn nim_sum_laws(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
        prop_assert_eq!(a.nim_sum(&b), b.nim_sum(&a));
        prop_assert_eq!(a.nim_sum(&b).nim_sum(&c), a.nim_sum(&b.nim_sum(&c)));
        prop_assert!(a.nim_sum(&a).is_zero());
        prop_assert_eq!(a.nim_sum(&Ordinal::zero()), a.clone());
        prop_assert_eq!(nim_sum_ord([&a, &b, &c]), a.nim_sum(&b).nim_sum(&c));
    }

    #[test]
    fn split_unsplit_inverse(a in arb_ordinal(), lambda in arb_ordinal(), m in 0u64..1000) {
        let (l, r) = a.omega_split();
        prop_assert_eq!(Ordinal::omega_unsplit(&l, &r), a);
        let m = BigUint::from(m);
        prop_assert_eq!(Ordinal::omega_unsplit(&lambda, &m).omega_split(), (lambda, m));
    }

    #[test]
    fn sampled_ordinals_are_smaller(a in arb_ordinal(), seed: u64, budget in 1u64..20) {
        prop_assume!(!a.is_zero());
        let s = sample_below(&a, seed, budget).unwrap();
        prop_assert_eq!(s.cmp(&a), Ordering::Less);
    }
}

#[test]
fn finite_nim_sum_is_xor() {
    for x in 0u64..256 {
        for y in 0u64..256 {
            assert_eq!(Ordinal::from(x).nim_sum(&Ordinal::from(y)), Ordinal::from(x ^ y));
        }
    }
}

#[test]
fn json_schema_shape() {
    let a: Ordinal = "w^2+w*4+30".parse().unwrap();
    let v = serde_json::to_value(&a).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"terms": [
            {"exp": {"terms": [{"exp": {"terms": []}, "coeff": 2}]}, "coeff": 1},
            {"exp": {"terms": [{"exp": {"terms": []}, "coeff": 1}]}, "coeff": 4},
            {"exp": {"terms": []}, "coeff": 30}
        ]})
    );
    assert_eq!(serde_json::to_string(&Ordinal::zero()).unwrap(), r#"{"terms":[]}"#);

    let big: Ordinal = "w*36893488147419103232".parse().unwrap();
    let json = serde_json::to_string(&big).unwrap();
    assert!(json.contains(r#""coeff":"36893488147419103232""#));
    assert_eq!(serde_json::from_str::<Ordinal>(&json).unwrap(), big);

    for bad in [
        r#"{"terms":[{"exp":{"terms":[]},"coeff":0}]}"#,
        r#"{"terms":[{"exp":{"terms":[]},"coeff":1},{"exp":{"terms":[]},"coeff":2}]}"#,
    ] {
        assert!(serde_json::from_str::<Ordinal>(bad).is_err());
    }
}

#[test]
fn string_adapter() {
    #[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
    struct Wrap {
        #[serde(with = "serde_str")]
        at: Ordinal,
    }
    let w = Wrap { at: "w*3+5".parse().unwrap() };
    let json = serde_json::to_string(&w).unwrap();
    assert_eq!(json, r#"{"at":"w*3+5"}"#);
    assert_eq!(serde_json::from_str::<Wrap>(&json).unwrap(), w);
    assert!(serde_json::from_str::<Wrap>(r#"{"at":"w+w^2"}"#).is_err());
}
