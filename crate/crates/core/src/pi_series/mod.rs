//! Series for pi: the alternating odd-reciprocal series with its three tail
//! corrections, four auxiliary series, the arctangent series and the
//! sqrt(12) series, plus the 13-digit fraction and circumference check.
//!
//! Public routines take the requested output `scale` and work internally at
//! `scale + GUARD_DIGITS`, truncating once at the end.

mod bounds;
pub(crate) mod sum;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bigfixed::{BigNat, FixedDec};
use crate::error::{Error, Result};
use crate::par::Execution;
use sum::{sum_terms, Den, Term};

pub use bounds::{terms_for_digits, terms_for_digits_capped, DEFAULT_TERM_CAP};

/// Extra digits carried through every series evaluation.
pub const GUARD_DIGITS: u32 = 10;

/// Numerator of the 13-digit fraction for pi.
pub const MADHAVA_NUMERATOR: u64 = 2_827_433_388_233;
/// Denominator of the 13-digit fraction, also the circle diameter it describes.
pub const MADHAVA_DIAMETER: u64 = 900_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesId {
    /// pi/4 = 1 - 1/3 + 1/5 - ...
    Leibniz,
    /// pi/4 = 3/4 + 1/(3^3-3) - 1/(5^3-5) + ...
    AuxA,
    /// pi/8 = 1/(2^2-1) + 1/(6^2-1) + 1/(10^2-1) + ...
    AuxB,
    /// pi/4 = 4/(1^5+4) - 4/(3^5+12) + ...
    AuxC,
    /// pi/4 = 1/2 + 1/(2^2-1) - 1/(4^2-1) + ...
    AuxD,
    /// pi = sqrt(12) (1 - 1/(3*3) + 1/(5*3^2) - ...)
    Sqrt12,
}

impl SeriesId {
    pub const ALL: [SeriesId; 6] = [
        SeriesId::Leibniz,
        SeriesId::AuxA,
        SeriesId::AuxB,
        SeriesId::AuxC,
        SeriesId::AuxD,
        SeriesId::Sqrt12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesId::Leibniz => "leibniz",
            SeriesId::AuxA => "aux-a",
            SeriesId::AuxB => "aux-b",
            SeriesId::AuxC => "aux-c",
            SeriesId::AuxD => "aux-d",
            SeriesId::Sqrt12 => "sqrt12",
        }
    }

    pub fn is_aux(self) -> bool {
        matches!(
            self,
            SeriesId::AuxA | SeriesId::AuxB | SeriesId::AuxC | SeriesId::AuxD
        )
    }

    /// Whether successive terms alternate in sign.
    pub fn is_alternating(self) -> bool {
        self != SeriesId::AuxB
    }

    fn normalization(self) -> u32 {
        match self {
            SeriesId::AuxB => 8,
            SeriesId::Sqrt12 => 1,
            _ => 4,
        }
    }

    /// Constant added before the first counted term, as (num, den).
    fn leading(self) -> Option<(u64, u64)> {
        match self {
            SeriesId::AuxA => Some((3, 4)),
            SeriesId::AuxD => Some((1, 2)),
            _ => None,
        }
    }

    /// The `k`-th summed term (1-based) before normalization.
    fn term(self, k: u64) -> Term {
        self.term_impl(k, true)
    }

    fn term_impl(self, k: u64, allow_small: bool) -> Term {
        let k128 = k as u128;
        let big_k = || BigNat::from_u64(k);
        let negative = self.is_alternating() && k.is_multiple_of(2);
        let (num, den) = match self {
            SeriesId::Leibniz => (
                1,
                Den::pick(allow_small.then_some(2 * k128 - 1), || {
                    &big_k().mul_small(2) - &BigNat::one()
                }),
            ),
            SeriesId::AuxA => {
                let m = 2 * k128 + 1;
                let small = m
                    .checked_mul(m)
                    .and_then(|m2| m2.checked_mul(m))
                    .map(|m3| m3 - m);
                (
                    1,
                    Den::pick(small.filter(|_| allow_small), || {
                        let m = big_k().mul_small(2).add_small(1);
                        &m.pow(3) - &m
                    }),
                )
            }
            SeriesId::AuxB => {
                let m = 4 * k128 - 2;
                let small = m.checked_mul(m).map(|m2| m2 - 1);
                (
                    1,
                    Den::pick(small.filter(|_| allow_small), || {
                        let m = &big_k().mul_small(4) - &BigNat::from_u64(2);
                        &m.pow(2) - &BigNat::one()
                    }),
                )
            }
            SeriesId::AuxC => {
                let m = 2 * k128 - 1;
                let small = m.checked_pow(5).and_then(|m5| m5.checked_add(4 * m));
                (
                    4,
                    Den::pick(small.filter(|_| allow_small), || {
                        let m = &big_k().mul_small(2) - &BigNat::one();
                        &m.pow(5) + &m.mul_small(4)
                    }),
                )
            }
            SeriesId::AuxD => {
                let m = 2 * k128;
                let small = m.checked_mul(m).map(|m2| m2 - 1);
                (
                    1,
                    Den::pick(small.filter(|_| allow_small), || {
                        let m = big_k().mul_small(2);
                        &m.pow(2) - &BigNat::one()
                    }),
                )
            }
            SeriesId::Sqrt12 => {
                let small = u32::try_from(k - 1)
                    .ok()
                    .and_then(|e| 3u128.checked_pow(e))
                    .and_then(|p| p.checked_mul(2 * k128 - 1));
                (
                    1,
                    Den::pick(small.filter(|_| allow_small), || {
                        let odd = &big_k().mul_small(2) - &BigNat::one();
                        let exp = u32::try_from(k - 1).expect("term index fits u32");
                        &odd * &BigNat::from_u64(3).pow(exp)
                    }),
                )
            }
        };
        Term { negative, num, den }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// Tail corrections appended after the `n`-th term of the Leibniz series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Correction {
    None,
    /// 1/(4n)
    F1,
    /// n/(4n^2+1)
    F2,
    /// (n^2+1)/(n(4n^2+5))
    F3,
}

impl Correction {
    pub const ALL: [Correction; 4] = [
        Correction::None,
        Correction::F1,
        Correction::F2,
        Correction::F3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Correction::None => "none",
            Correction::F1 => "f1",
            Correction::F2 => "f2",
            Correction::F3 => "f3",
        }
    }

    /// Exact value at `n` as (numerator, denominator); `None` has no ratio.
    fn ratio(self, n: u64) -> Option<(BigNat, BigNat)> {
        let n = BigNat::from_u64(n);
        let n2 = &n * &n;
        match self {
            Correction::None => None,
            Correction::F1 => Some((BigNat::one(), n.mul_small(4))),
            Correction::F2 => Some((n.clone(), n2.mul_small(4).add_small(1))),
            Correction::F3 => Some((n2.add_small(1), &n * &n2.mul_small(4).add_small(5))),
        }
    }
}

impl fmt::Display for Correction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Correction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Correction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// A fully specified pi evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeriesSpec {
    pub series: SeriesId,
    pub terms: u64,
    pub correction: Correction,
    /// Output digits after the decimal point.
    pub scale: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiResult {
    pub value: FixedDec,
    pub terms_used: u64,
    /// A-priori bound on `|value - pi|`, excluding truncation slack.
    pub error_bound: Option<FixedDec>,
}

impl SeriesSpec {
    pub fn new(series: SeriesId, terms: u64, correction: Correction, scale: u32) -> Result<Self> {
        if terms == 0 {
            return Err(Error::ZeroTerms);
        }
        if correction != Correction::None && series != SeriesId::Leibniz {
            return Err(Error::CorrectionNotAllowed);
        }
        Ok(SeriesSpec {
            series,
            terms,
            correction,
            scale,
        })
    }

    pub fn evaluate(&self) -> Result<PiResult> {
        self.evaluate_with(Execution::default())
    }

    pub fn evaluate_with(&self, exec: Execution) -> Result<PiResult> {
        let value = match (self.series, self.correction) {
            (SeriesId::Leibniz, Correction::None) => {
                partial_sum_with(SeriesId::Leibniz, self.terms, self.scale, exec)?
            }
            (SeriesId::Leibniz, c) => corrected_with(self.terms, c, self.scale, exec)?,
            (series, _) => partial_sum_with(series, self.terms, self.scale, exec)?,
        };
        let error_bound = if self.correction == Correction::None {
            Some(bounds::error_bound(self.series, self.terms, self.scale)?)
        } else {
            None
        };
        Ok(PiResult {
            value,
            terms_used: self.terms,
            error_bound,
        })
    }
}

fn check_terms(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroTerms)
    } else {
        Ok(())
    }
}

/// Un-normalized sum (leading constant plus `n` terms) at `working` scale.
fn raw_sum(series: SeriesId, n: u64, working: u32, exec: Execution) -> Result<FixedDec> {
    let mut sum = sum_terms(1..n + 1, working, exec, move |k| series.term(k));
    if let Some((num, den)) = series.leading() {
        let lead = FixedDec::from_ratio(
            &BigNat::from_u64(num),
            &BigNat::from_u64(den),
            false,
            working,
        )?;
        sum = &sum + &lead;
    }
    Ok(sum)
}

fn sqrt12(working: u32) -> FixedDec {
    FixedDec::from_int(12, 0)
        .isqrt(working)
        .expect("12 is positive")
}

fn partial_sum_with(series: SeriesId, n: u64, scale: u32, exec: Execution) -> Result<FixedDec> {
    check_terms(n)?;
    let working = scale + GUARD_DIGITS;
    let sum = raw_sum(series, n, working, exec)?;
    let full = match series {
        SeriesId::Sqrt12 => sum.mul(&sqrt12(working)),
        s => sum.mul_small(s.normalization()),
    };
    Ok(full.rescale(scale))
}

/// Any of the six series after `n` terms, normalized to approximate pi.
pub fn partial_sum(series: SeriesId, n: u64, scale: u32) -> Result<FixedDec> {
    partial_sum_with(series, n, scale, Execution::default())
}

/// `4 * (1 - 1/3 + ... + (-1)^(n-1)/(2n-1))`.
pub fn leibniz_partial(n: u64, scale: u32) -> Result<FixedDec> {
    partial_sum(SeriesId::Leibniz, n, scale)
}

/// One of the auxiliary series A to D, normalized to approximate pi.
pub fn aux_series(series: SeriesId, n: u64, scale: u32) -> Result<FixedDec> {
    if !series.is_aux() {
        return Err(Error::OutOfDomain {
            what: "aux_series",
            value: series.name().to_string(),
            bound: "aux-a, aux-b, aux-c or aux-d",
        });
    }
    partial_sum(series, n, scale)
}

/// `sqrt(12) * (1 - 1/(3*3) + ... )` after `n` terms.
pub fn pi_sqrt12(n: u64, scale: u32) -> Result<FixedDec> {
    partial_sum(SeriesId::Sqrt12, n, scale)
}

/// The correction value `F_i(n)`, truncated at `scale`.
pub fn correction_term(n: u64, variant: Correction, scale: u32) -> Result<FixedDec> {
    check_terms(n)?;
    match variant.ratio(n) {
        Some((num, den)) => FixedDec::from_ratio(&num, &den, false, scale),
        None => Ok(FixedDec::zero(scale)),
    }
}

fn corrected_with(n: u64, variant: Correction, scale: u32, exec: Execution) -> Result<FixedDec> {
    check_terms(n)?;
    let working = scale + GUARD_DIGITS;
    let sum = raw_sum(SeriesId::Leibniz, n, working, exec)?;
    let tail = match variant.ratio(n) {
        // the correction enters with sign (-1)^n
        Some((num, den)) => FixedDec::from_ratio(&num, &den, n % 2 == 1, working)?,
        None => FixedDec::zero(working),
    };
    Ok((&sum + &tail).mul_small(4).rescale(scale))
}

/// `4 * (partial sum + (-1)^n F_i(n))`.
pub fn leibniz_corrected(n: u64, variant: Correction, scale: u32) -> Result<FixedDec> {
    corrected_with(n, variant, scale, Execution::default())
}

/// `x - x^3/3 + x^5/5 - ...` at working scale, `|x| <= 1`.
pub(crate) fn arctan_sum(x: &FixedDec, n: u64, working: u32) -> FixedDec {
    let x = x.rescale(working);
    let x2 = x.mul(&x);
    let mut power = x;
    let mut sum = FixedDec::zero(working);
    for k in 0..n {
        let term = power
            .div_nat(&BigNat::from_u64(2 * k + 1))
            .expect("odd divisor");
        sum = if k % 2 == 0 {
            &sum + &term
        } else {
            &sum - &term
        };
        power = power.mul(&x2);
    }
    sum
}

/// First `n` terms of the arctangent series; rejects `|x| > 1`.
pub fn arctan_series(x: &FixedDec, n: u64, scale: u32) -> Result<FixedDec> {
    check_terms(n)?;
    if x.abs().cmp_value(&FixedDec::one(0)).is_gt() {
        return Err(Error::OutOfDomain {
            what: "arctan_series",
            value: x.to_string(),
            bound: "|x| <= 1",
        });
    }
    Ok(arctan_sum(x, n, scale + GUARD_DIGITS).rescale(scale))
}

/// The 13-digit fraction 2827433388233 / (9 * 10^11), truncated at `scale`.
pub fn madhava_pi_value(scale: u32) -> FixedDec {
    FixedDec::from_ratio(
        &BigNat::from_u64(MADHAVA_NUMERATOR),
        &BigNat::from_u64(MADHAVA_DIAMETER),
        false,
        scale,
    )
    .expect("nonzero denominator")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircumferenceReport {
    pub diameter: BigNat,
    /// The circumference quoted with the 13-digit fraction.
    pub madhava: BigNat,
    /// Nearest integer to pi times the diameter.
    pub computed: BigNat,
    /// `madhava - computed`.
    pub delta: i64,
    pub pi_used: FixedDec,
}

/// Circumference of a circle of diameter 9 * 10^11, from a sqrt(12)-series
/// pi accurate to `scale` digits, against the quoted 2827433388233.
pub fn circumference_check(scale: u32) -> Result<CircumferenceReport> {
    if scale < 20 {
        return Err(Error::OutOfDomain {
            what: "circumference_check",
            value: scale.to_string(),
            bound: "scale >= 20",
        });
    }
    let terms = terms_for_digits(SeriesId::Sqrt12, scale)?;
    let pi = pi_sqrt12(terms, scale)?;
    let diameter = BigNat::from_u64(MADHAVA_DIAMETER);
    let (_, computed) = pi.mul_nat(&diameter).round_to_integer();
    let madhava = BigNat::from_u64(MADHAVA_NUMERATOR);
    let (gap, below) = madhava.abs_diff(&computed);
    let gap = gap.to_u64().expect("small gap") as i64;
    Ok(CircumferenceReport {
        diameter,
        madhava,
        computed,
        delta: if below { -gap } else { gap },
        pi_used: pi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::pi_reference;

    fn d(s: &str) -> FixedDec {
        s.parse().unwrap()
    }

    #[test]
    fn leibniz_small_n() {
        assert_eq!(leibniz_partial(1, 6).unwrap().to_string(), "4.000000");
        assert_eq!(leibniz_partial(2, 6).unwrap().to_string(), "2.666666");
        // 1052/315 by exact rational summation
        assert_eq!(
            leibniz_partial(5, 12).unwrap().to_string(),
            "3.339682539682"
        );
        assert_eq!(leibniz_partial(0, 6), Err(Error::ZeroTerms));
    }

    #[test]
    fn corrections() {
        assert_eq!(
            correction_term(1, Correction::F1, 2).unwrap().to_string(),
            "0.25"
        );
        assert_eq!(
            correction_term(1, Correction::F2, 1).unwrap().to_string(),
            "0.2"
        );
        assert_eq!(
            correction_term(2, Correction::F3, 6).unwrap().to_string(),
            "0.119047"
        );
        assert_eq!(
            leibniz_corrected(1, Correction::F2, 6).unwrap().to_string(),
            "3.200000"
        );
        assert_eq!(
            leibniz_corrected(1, Correction::F3, 6).unwrap().to_string(),
            "3.111111"
        );
        assert_eq!(
            leibniz_corrected(7, Correction::None, 12).unwrap(),
            leibniz_partial(7, 12).unwrap()
        );
    }

    #[test]
    fn f3_at_twenty_terms() {
        // exact rational oracle: |4(S_20 + F3(20)) - pi| = 4.3007e-10
        let v = leibniz_corrected(20, Correction::F3, 20).unwrap();
        let err = v.abs_diff(&pi_reference().rescale(20));
        assert!(err.cmp_value(&d("0.00000000044")).is_lt());
        assert!(err.cmp_value(&d("0.00000000042")).is_gt());
    }

    #[test]
    fn aux_small_n() {
        assert_eq!(
            aux_series(SeriesId::AuxB, 1, 6).unwrap().to_string(),
            "2.666666"
        );
        // 160/51
        assert_eq!(
            aux_series(SeriesId::AuxC, 2, 12).unwrap().to_string(),
            "3.137254901960"
        );
        // 1321/420
        assert_eq!(
            aux_series(SeriesId::AuxA, 3, 12).unwrap().to_string(),
            "3.145238095238"
        );
        // 4 (1/2 + 1/3) = 10/3
        assert_eq!(
            aux_series(SeriesId::AuxD, 1, 6).unwrap().to_string(),
            "3.333333"
        );
        assert!(aux_series(SeriesId::Leibniz, 1, 6).is_err());
    }

    #[test]
    fn big_denominators_match_small_ones() {
        for series in SeriesId::ALL {
            for k in [1u64, 2, 3, 40, 41] {
                let (Den::Small(small), Den::Big(big)) = (
                    series.term_impl(k, true).den,
                    series.term_impl(k, false).den,
                ) else {
                    panic!("{series} k={k}: unexpected path")
                };
                assert_eq!(big, BigNat::from_u128(small), "{series} k={k}");
            }
        }
        // past u128 range the BigNat path takes over
        let Den::Big(d) = SeriesId::Sqrt12.term(90).den else {
            panic!("expected big denominator")
        };
        assert_eq!(d, &BigNat::from_u64(179) * &BigNat::from_u64(3).pow(89));
    }

    #[test]
    fn arctan() {
        assert!(arctan_series(&FixedDec::zero(5), 4, 10).unwrap().is_zero());
        assert!(arctan_series(&d("1.01"), 4, 10).is_err());
        let x = d("0.5");
        let v = arctan_series(&x, 8, 12).unwrap();
        // 0.46364760900080611621 from a 60-term run; alternating bound 0.5^17/17
        let truth = d("0.46364760900080611621");
        let bound = d("0.000000449");
        assert!(v.abs_diff(&truth.rescale(12)).cmp_value(&bound).is_le());
        let long = arctan_series(&x, 60, 20).unwrap();
        assert!(long
            .abs_diff(&truth)
            .cmp_value(&d("0.00000000000000000002"))
            .is_le());
    }

    #[test]
    fn arctan_at_one_is_quarter_leibniz() {
        let one = FixedDec::one(0);
        for k in 1..30 {
            let arctan = arctan_sum(&one, k, 25);
            let leibniz = raw_sum(SeriesId::Leibniz, k, 25, Execution::Sequential).unwrap();
            assert_eq!(arctan, leibniz, "k = {k}");
        }
    }

    #[test]
    fn sqrt12_series() {
        assert_eq!(pi_sqrt12(1, 9).unwrap().to_string(), "3.464101615");
        assert_eq!(pi_sqrt12(2, 9).unwrap().to_string(), "3.079201435");
        let v = pi_sqrt12(28, 20).unwrap();
        assert!(v.to_string().starts_with("3.14159265358979"));
    }

    #[test]
    fn madhava_fraction() {
        assert_eq!(madhava_pi_value(10).to_string(), "3.1415926535");
        assert_eq!(madhava_pi_value(14).to_string(), "3.14159265359222");
        assert_eq!(madhava_pi_value(0).to_string(), "3");
    }

    #[test]
    fn circumference() {
        let report = circumference_check(20).unwrap();
        assert_eq!(report.madhava.to_string(), "2827433388233");
        assert_eq!(report.computed.to_string(), "2827433388231");
        assert_eq!(report.delta, 2);
        assert!(circumference_check(19).is_err());
    }

    #[test]
    fn spec_validation() {
        assert_eq!(
            SeriesSpec::new(SeriesId::AuxA, 3, Correction::F1, 10),
            Err(Error::CorrectionNotAllowed)
        );
        assert_eq!(
            SeriesSpec::new(SeriesId::Leibniz, 0, Correction::None, 10),
            Err(Error::ZeroTerms)
        );
        let spec = SeriesSpec::new(SeriesId::Leibniz, 50, Correction::F3, 15).unwrap();
        let r = spec.evaluate().unwrap();
        assert_eq!(r.terms_used, 50);
        assert!(r.error_bound.is_none());
        assert_eq!(r, spec.evaluate_with(Execution::Sequential).unwrap());
    }

    #[test]
    fn error_bounds_hold() {
        let pi = pi_reference();
        for series in SeriesId::ALL {
            for n in [1u64, 2, 5, 17] {
                let r = SeriesSpec::new(series, n, Correction::None, 25)
                    .unwrap()
                    .evaluate()
                    .unwrap();
                let bound = r.error_bound.unwrap();
                let slack = FixedDec::from_int(10, 0).mul(&FixedDec::ulp(25));
                let err = r.value.abs_diff(&pi.rescale(25));
                assert!(
                    err.cmp_value(&(&bound.rescale(25) + &slack)).is_le(),
                    "{series} n={n}: {err} > {bound}"
                );
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for s in SeriesId::ALL {
            assert_eq!(s.name().parse::<SeriesId>().unwrap(), s);
        }
        for c in Correction::ALL {
            assert_eq!(c.name().parse::<Correction>().unwrap(), c);
        }
        assert!("aux-e".parse::<SeriesId>().is_err());
    }
}
