use madhava::{BigNat, FixedDec};
use proptest::prelude::*;

fn nat() -> impl Strategy<Value = BigNat> {
    "0|[1-9][0-9]{0,63}".prop_map(|s| s.parse().unwrap())
}

fn nonzero_nat() -> impl Strategy<Value = BigNat> {
    "[1-9][0-9]{0,63}".prop_map(|s| s.parse().unwrap())
}

fn dec() -> impl Strategy<Value = FixedDec> {
    (any::<bool>(), nat(), 0u32..40).prop_map(|(neg, m, s)| FixedDec::new(neg, m, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in nat(), b in nat(), c in nat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn division_identity(a in nat(), b in nonzero_nat()) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert!(r < b);
        prop_assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn string_round_trip(x in dec()) {
        let text = x.to_string();
        let back: FixedDec = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn nat_string_round_trip(a in nat()) {
        prop_assert_eq!(a.to_string().parse::<BigNat>().unwrap(), a);
    }
}

proptest! {
    #[test]
    fn ratio_truncates(n in nat(), d in nonzero_nat(), s in 0u32..40) {
        // 0 <= n/d - v < 10^-s  <=>  m d <= n 10^s < (m + 1) d
        let v = FixedDec::from_ratio(&n, &d, false, s).unwrap();
        let scaled = n.mul_pow10(s);
        prop_assert!(&v.mantissa().clone() * &d <= scaled);
        prop_assert!(scaled < &v.mantissa().add_small(1) * &d);
    }

    #[test]
    fn isqrt_brackets(m in nat(), in_scale in 0u32..20, s in 0u32..30) {
        let a = FixedDec::new(false, m, in_scale);
        let r = a.isqrt(s).unwrap();
        let next = &r + &FixedDec::ulp(s);
        prop_assert!(r.mul_exact(&r).cmp_value(&a).is_le());
        prop_assert!(a.cmp_value(&next.mul_exact(&next)).is_lt());
    }

    #[test]
    fn arithmetic_matches_i128(a in -10i64.pow(15)..10i64.pow(15), b in -10i64.pow(15)..10i64.pow(15)) {
        let (x, y) = (FixedDec::from_int(a, 3), FixedDec::from_int(b, 3));
        prop_assert_eq!(&x + &y, FixedDec::from_int(a + b, 3));
        prop_assert_eq!(&x - &y, FixedDec::from_int(a - b, 3));
        prop_assert_eq!(x.cmp_value(&y), a.cmp(&b));
        let product = x.mul_exact(&y).rescale(0);
        let expected = (a as i128) * (b as i128);
        prop_assert_eq!(product.to_string(), expected.to_string());
    }

    #[test]
    fn rescale_truncates_toward_zero(x in dec(), s in 0u32..40) {
        let t = x.rescale(s);
        prop_assert!(t.abs().cmp_value(&x.abs()).is_le());
        prop_assert!(x.abs_diff(&t).cmp_value(&FixedDec::ulp(s)).is_lt());
    }
}

#[test]
fn mismatched_scales_are_reported() {
    let a = FixedDec::from_int(1, 2);
    let b = FixedDec::from_int(1, 3);
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_sub(&b).is_err());
    assert!(BigNat::one().divrem(&BigNat::zero()).is_err());
    assert!(FixedDec::from_int(-4, 0).isqrt(5).is_err());
}
