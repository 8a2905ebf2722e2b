use madhava::geometry::{circumradius, circumradius_oracle, QuadSides};
use madhava::{BigNat, FixedDec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn d(s: &str) -> FixedDec {
    s.parse().unwrap()
}

fn milli(v: u64) -> FixedDec {
    FixedDec::new(false, BigNat::from_u64(v), 3)
}

#[test]
fn square_and_rectangle() {
    let sq = QuadSides::new(d("1"), d("1"), d("1"), d("1")).unwrap();
    let r = circumradius(&sq, 12).unwrap();
    assert_eq!(r.to_string(), "0.707106781186");
    assert_eq!(r, d("0.5").isqrt(12).unwrap());
    let rect = QuadSides::new(d("3"), d("4"), d("3"), d("4")).unwrap();
    assert_eq!(
        circumradius(&rect, 12).unwrap().to_string(),
        "2.500000000000"
    );
}

#[test]
fn rotation_and_reversal_are_exact() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let s: Vec<FixedDec> = (0..4).map(|_| milli(rng.gen_range(1000..2000))).collect();
        let q = QuadSides::new(s[0].clone(), s[1].clone(), s[2].clone(), s[3].clone()).unwrap();
        let r = circumradius(&q, 18).unwrap();
        for k in 1..4 {
            let rot: Vec<FixedDec> = (0..4).map(|i| s[(i + k) % 4].clone()).collect();
            let q = QuadSides::new(
                rot[0].clone(),
                rot[1].clone(),
                rot[2].clone(),
                rot[3].clone(),
            )
            .unwrap();
            assert_eq!(circumradius(&q, 18).unwrap(), r);
        }
        let rev = QuadSides::new(s[3].clone(), s[2].clone(), s[1].clone(), s[0].clone()).unwrap();
        assert_eq!(circumradius(&rev, 18).unwrap(), r);
    }
}

#[test]
fn scale_covariance() {
    let scale = 16;
    let tol = FixedDec::ulp(scale).mul_small(10);
    let q = QuadSides::new(d("1.3"), d("2.1"), d("1.7"), d("0.9")).unwrap();
    let r = circumradius(&q, scale + 6).unwrap();
    let doubled = circumradius(&q.scaled(2, 1, scale + 6).unwrap(), scale).unwrap();
    assert!(doubled
        .abs_diff(&r.mul_small(2).rescale(scale))
        .cmp_value(&tol)
        .is_le());
    let third = circumradius(&q.scaled(1, 3, scale + 6).unwrap(), scale).unwrap();
    let expected = r.div_nat(&BigNat::from_u64(3)).unwrap().rescale(scale);
    assert!(
        third.abs_diff(&expected).cmp_value(&tol).is_le(),
        "{third} vs {expected}"
    );
}

#[test]
fn oracle_round_trip() {
    let scale = 16;
    let tol = FixedDec::ulp(scale - 4);
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let mut angle = rng.gen_range(0..300u64);
        let mut angles = vec![milli(angle)];
        for _ in 0..3 {
            angle += rng.gen_range(400..1800u64);
            angles.push(milli(angle));
        }
        let radius = milli(rng.gen_range(500..5000));
        let angles: [FixedDec; 4] = angles.try_into().unwrap();
        let q = circumradius_oracle(&angles, &radius, scale).unwrap();
        let r = circumradius(&q, scale).unwrap();
        assert!(
            r.abs_diff(&radius).cmp_value(&tol).is_lt(),
            "{r} vs {radius}"
        );
    }
}

#[test]
fn degenerate_sets_rejected() {
    assert!(QuadSides::new(d("1"), d("1"), d("1"), d("3")).is_err());
    assert!(QuadSides::new(d("1"), d("0"), d("1"), d("1")).is_err());
    let flat = QuadSides::new(d("1"), d("1"), d("1"), d("2.9999999999999999")).unwrap();
    assert!(circumradius(&flat, 16).is_err());
}
