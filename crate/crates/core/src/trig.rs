//! Sine, cosine and sine-squared power series, nested evaluation over
//! precomputed coefficient tables, the 24-entry sine table at 3.75 degree
//! steps, second-order shift formulas and the angle-addition rules.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::bigfixed::{BigNat, FixedDec};
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::pi_series::GUARD_DIGITS;
use crate::reference::pi_at;

/// An angle in radians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Angle {
    radians: FixedDec,
}

impl Angle {
    pub fn from_radians(radians: FixedDec) -> Self {
        Angle { radians }
    }

    /// `degrees * pi / 180` truncated at `scale`, with pi carried at `scale + 10`.
    pub fn from_degrees(degrees: &FixedDec, scale: u32) -> Self {
        let pi = pi_at(scale + GUARD_DIGITS);
        let radians = degrees
            .mul_exact(&pi)
            .div_nat(&BigNat::from_u64(180))
            .expect("nonzero")
            .rescale(scale);
        Angle { radians }
    }

    /// `num / den` degrees, kept rational until the single conversion.
    pub fn from_degree_ratio(num: i64, den: u64, scale: u32) -> Self {
        let pi = pi_at(scale + GUARD_DIGITS);
        let radians = pi
            .mul_nat(&BigNat::from_u64(num.unsigned_abs()))
            .div_nat(&BigNat::from_u64(180 * den))
            .expect("nonzero");
        let radians = if num < 0 { -&radians } else { radians };
        Angle {
            radians: radians.rescale(scale),
        }
    }

    pub fn radians(&self) -> &FixedDec {
        &self.radians
    }

    /// Equivalent angle in `[-pi, pi]`, by subtracting multiples of `2 pi`.
    pub fn reduce(&self) -> Angle {
        let scale = self.radians.scale();
        let w = scale + GUARD_DIGITS;
        let two_pi = pi_at(w).mul_small(2);
        let (negative, turns) = self
            .radians
            .div(&two_pi, w)
            .expect("2pi is nonzero")
            .round_to_integer();
        let offset = two_pi.mul_nat(&turns);
        let offset = if negative { -&offset } else { offset };
        Angle {
            radians: (&self.radians.rescale(w) - &offset).rescale(scale),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Purpose {
    Sin,
    Cos,
}

/// Signed reciprocal factorials `(-1)^k / (2k+1)!` (sine) or `(-1)^k / (2k)!`
/// (cosine), truncated at a fixed scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    purpose: Purpose,
    scale: u32,
    coefficients: Vec<FixedDec>,
}

type TableKey = (Purpose, usize, u32);

impl CoeffTable {
    pub fn build(purpose: Purpose, terms: usize, scale: u32) -> Result<Self> {
        if terms == 0 {
            return Err(Error::ZeroTerms);
        }
        let mut factorial = BigNat::one();
        let mut next = 1u32;
        if purpose == Purpose::Sin {
            next = 2;
        }
        let mut coefficients = Vec::with_capacity(terms);
        for k in 0..terms {
            let c = FixedDec::from_ratio(&BigNat::one(), &factorial, k % 2 == 1, scale)?;
            coefficients.push(c);
            factorial = factorial.mul_small(next).mul_small(next + 1);
            next += 2;
        }
        Ok(CoeffTable {
            purpose,
            scale,
            coefficients,
        })
    }

    /// Shared table for `(purpose, terms, scale)`, built on first request.
    pub fn cached(purpose: Purpose, terms: usize, scale: u32) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<TableKey, Arc<CoeffTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (purpose, terms, scale);
        if let Some(table) = cache.lock().unwrap().get(&key) {
            return Ok(table.clone());
        }
        let table = Arc::new(CoeffTable::build(purpose, terms, scale)?);
        cache.lock().unwrap().insert(key, table.clone());
        Ok(table)
    }

    pub fn purpose(&self) -> Purpose {
        self.purpose
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn count(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[FixedDec] {
        &self.coefficients
    }

    /// Builds a table from explicit coefficients; used for custom polynomials.
    pub fn from_coefficients(purpose: Purpose, coefficients: Vec<FixedDec>) -> Result<Self> {
        let scale = coefficients.first().ok_or(Error::ZeroTerms)?.scale();
        if let Some(c) = coefficients.iter().find(|c| c.scale() != scale) {
            return Err(Error::ScaleMismatch {
                left: scale,
                right: c.scale(),
            });
        }
        Ok(CoeffTable {
            purpose,
            scale,
            coefficients,
        })
    }
}

/// `sum c_k x^k` at `x = theta^2`, innermost coefficient first, one multiply
/// and one add per coefficient. Sine tables get a final multiply by `theta`.
/// Works at the table's scale and truncates to `scale`.
pub fn nested_eval(table: &CoeffTable, theta: &Angle, scale: u32) -> FixedDec {
    let w = table.scale;
    let t = theta.radians.rescale(w);
    let x = t.mul(&t);
    let mut coeffs = table.coefficients.iter().rev();
    let mut acc = coeffs.next().expect("tables are nonempty").clone();
    for c in coeffs {
        acc = &acc.mul(&x) + c;
    }
    if table.purpose == Purpose::Sin {
        acc = acc.mul(&t);
    }
    acc.rescale(scale)
}

fn check_terms(terms: usize) -> Result<()> {
    if terms == 0 {
        Err(Error::ZeroTerms)
    } else {
        Ok(())
    }
}

fn check_within_pi(what: &'static str, theta: &Angle) -> Result<()> {
    let r = &theta.radians;
    if r.abs().cmp_value(&pi_at(r.scale() + GUARD_DIGITS)).is_gt() {
        return Err(Error::OutOfDomain {
            what,
            value: r.to_string(),
            bound: "|theta| <= pi",
        });
    }
    Ok(())
}

fn check_within_half_pi(what: &'static str, r: &FixedDec) -> Result<()> {
    let doubled = r.abs().mul_small(2);
    if doubled.cmp_value(&pi_at(r.scale() + GUARD_DIGITS)).is_gt() {
        return Err(Error::OutOfDomain {
            what,
            value: r.to_string(),
            bound: "|angle| <= pi/2",
        });
    }
    Ok(())
}

/// Working scale: output scale, guard digits, and room for Horner's
/// amplification of truncation error by up to `ceil(theta^2)^terms`.
fn working_scale(theta: &Angle, terms: usize, scale: u32) -> u32 {
    let r = &theta.radians;
    let square = r.mul(r);
    let (_, floor) = square.rescale(0).round_to_integer();
    let ceil = floor.add_small(1);
    let growth = ceil.pow(terms as u32).decimal_digits();
    scale + GUARD_DIGITS + growth
}

fn series(purpose: Purpose, theta: &Angle, terms: usize, scale: u32) -> Result<FixedDec> {
    check_terms(terms)?;
    check_within_pi(
        match purpose {
            Purpose::Sin => "sin_series",
            Purpose::Cos => "cos_series",
        },
        theta,
    )?;
    let working = working_scale(theta, terms, scale);
    let table = CoeffTable::cached(purpose, terms, working)?;
    Ok(nested_eval(&table, theta, scale))
}

/// `theta - theta^3/3! + theta^5/5! - ...` with `terms` terms, `|theta| <= pi`.
pub fn sin_series(theta: &Angle, terms: usize, scale: u32) -> Result<FixedDec> {
    series(Purpose::Sin, theta, terms, scale)
}

/// `1 - theta^2/2! + theta^4/4! - ...` with `terms` terms, `|theta| <= pi`.
pub fn cos_series(theta: &Angle, terms: usize, scale: u32) -> Result<FixedDec> {
    series(Purpose::Cos, theta, terms, scale)
}

/// Term-by-term summation of the sine or cosine series with explicit powers
/// and factorials. Slower than [`nested_eval`]; kept as a second route.
pub fn termwise_series(
    purpose: Purpose,
    theta: &Angle,
    terms: usize,
    scale: u32,
) -> Result<FixedDec> {
    check_terms(terms)?;
    check_within_pi("termwise_series", theta)?;
    let w = working_scale(theta, terms, scale);
    let t = theta.radians.rescale(w);
    let x = t.mul(&t);
    let (mut power, mut factorial, mut next) = match purpose {
        Purpose::Sin => (t.clone(), BigNat::one(), 2u32),
        Purpose::Cos => (FixedDec::one(w), BigNat::one(), 1u32),
    };
    let mut sum = FixedDec::zero(w);
    for k in 0..terms {
        let term = power.div_nat(&factorial)?;
        sum = if k % 2 == 0 {
            &sum + &term
        } else {
            &sum - &term
        };
        power = power.mul(&x);
        factorial = factorial.mul_small(next).mul_small(next + 1);
        next += 2;
    }
    Ok(sum.rescale(scale))
}

/// `theta^2 - theta^4/(2^2 - 2/2) + theta^6/((2^2 - 2/2)(3^2 - 3/2)) - ...`.
///
/// The k-th denominator `prod_{j=2..k} (j^2 - j/2)` equals
/// `prod j(2j-1) / 2^(k-1)`; the power of two is moved to the numerator
/// before the single truncating division.
pub fn sin_sq_series(theta: &Angle, terms: usize, scale: u32) -> Result<FixedDec> {
    check_terms(terms)?;
    check_within_pi("sin_sq_series", theta)?;
    let w = working_scale(theta, terms + 1, scale);
    let t = theta.radians.rescale(w);
    let x = t.mul(&t);
    let mut power = x.clone();
    let mut denominator = BigNat::one();
    let mut two_power = BigNat::one();
    let mut sum = FixedDec::zero(w);
    for k in 1..=terms as u64 {
        if k >= 2 {
            denominator = &denominator * &BigNat::from_u64(k * (2 * k - 1));
            two_power = two_power.mul_small(2);
        }
        let term = power.mul_nat(&two_power).div_nat(&denominator)?;
        sum = if k % 2 == 1 {
            &sum + &term
        } else {
            &sum - &term
        };
        power = power.mul(&x);
    }
    Ok(sum.rescale(scale))
}

/// Whether `u^j / j! < 10^-scale`, with `u` an exact rational upper bound
/// `num / 10^den_scale`.
fn power_over_factorial_below(num: &BigNat, den_scale: u32, j: u32, scale: u32) -> bool {
    let mut factorial = BigNat::one();
    for i in 2..=j {
        factorial = factorial.mul_small(i);
    }
    let lhs = num.pow(j).mul_pow10(scale);
    let rhs = &factorial * &BigNat::pow10(den_scale * j);
    lhs < rhs
}

/// Fewest terms after which both the sine and the cosine remainders at
/// `theta` are below `10^-scale` (Lagrange form).
pub fn terms_for_accuracy(theta: &Angle, scale: u32) -> usize {
    let r = &theta.radians;
    let upper = r.mantissa().add_small(1);
    let mut n = 1u32;
    while !(power_over_factorial_below(&upper, r.scale(), 2 * n, scale)
        && power_over_factorial_below(&upper, r.scale(), 2 * n + 1, scale))
    {
        n += 1;
    }
    n as usize
}

/// Shift formulas from `u` by a small `h`:
/// `sin(u+h) ~ sin u + h cos u - h^2/2 sin u` and
/// `cos(u+h) ~ cos u - h sin u - h^2/2 cos u`.
///
/// Second-order approximations: the error is about `|h|^3 / 6`.
pub fn taylor_shift(purpose: Purpose, u: &Angle, h: &FixedDec, scale: u32) -> Result<FixedDec> {
    check_within_half_pi("taylor_shift", &u.radians)?;
    if h.abs().cmp_value(&"0.5".parse().unwrap()).is_gt() {
        return Err(Error::OutOfDomain {
            what: "taylor_shift",
            value: h.to_string(),
            bound: "|h| <= 0.5",
        });
    }
    let w = scale + GUARD_DIGITS;
    let terms = terms_for_accuracy(u, w);
    let s = sin_series(u, terms, w)?;
    let c = cos_series(u, terms, w)?;
    let h = h.rescale(w);
    let half_h2 = h.mul(&h).div_nat(&BigNat::from_u64(2))?;
    let out = match purpose {
        Purpose::Sin => &(&s + &h.mul(&c)) - &half_h2.mul(&s),
        Purpose::Cos => &(&c - &h.mul(&s)) - &half_h2.mul(&c),
    };
    Ok(out.rescale(scale))
}

pub fn taylor_shift_sin(u: &Angle, h: &FixedDec, scale: u32) -> Result<FixedDec> {
    taylor_shift(Purpose::Sin, u, h, scale)
}

pub fn taylor_shift_cos(u: &Angle, h: &FixedDec, scale: u32) -> Result<FixedDec> {
    taylor_shift(Purpose::Cos, u, h, scale)
}

/// The four sum and difference rules for sine and cosine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AngleRule {
    /// sin(x+y) = sin x cos y + cos x sin y
    SinSum,
    /// sin(x-y) = sin x cos y - cos x sin y
    SinDiff,
    /// cos(x+y) = cos x cos y - sin x sin y
    CosSum,
    /// cos(x-y) = cos x cos y + sin x sin y
    CosDiff,
}

impl AngleRule {
    pub const ALL: [AngleRule; 4] = [
        AngleRule::SinSum,
        AngleRule::SinDiff,
        AngleRule::CosSum,
        AngleRule::CosDiff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AngleRule::SinSum => "sin-sum",
            AngleRule::SinDiff => "sin-diff",
            AngleRule::CosSum => "cos-sum",
            AngleRule::CosDiff => "cos-diff",
        }
    }

    fn is_sum(self) -> bool {
        matches!(self, AngleRule::SinSum | AngleRule::CosSum)
    }
}

impl fmt::Display for AngleRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AngleRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AngleRule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// Right-hand side of one addition rule from series values at `x` and `y`.
pub fn angle_add(x: &Angle, y: &Angle, rule: AngleRule, scale: u32) -> Result<FixedDec> {
    check_within_half_pi("angle_add", &x.radians)?;
    check_within_half_pi("angle_add", &y.radians)?;
    let s = x.radians.scale().max(y.radians.scale());
    let (xr, yr) = (x.radians.rescale(s), y.radians.rescale(s));
    let combined = if rule.is_sum() { &xr + &yr } else { &xr - &yr };
    check_within_half_pi("angle_add", &combined)?;

    let w = scale + GUARD_DIGITS;
    let values = |a: &Angle| -> Result<(FixedDec, FixedDec)> {
        let terms = terms_for_accuracy(a, w);
        Ok((sin_series(a, terms, w)?, cos_series(a, terms, w)?))
    };
    let (sx, cx) = values(x)?;
    let (sy, cy) = values(y)?;
    let out = match rule {
        AngleRule::SinSum => &sx.mul(&cy) + &cx.mul(&sy),
        AngleRule::SinDiff => &sx.mul(&cy) - &cx.mul(&sy),
        AngleRule::CosSum => &cx.mul(&cy) - &sx.mul(&sy),
        AngleRule::CosDiff => &cx.mul(&cy) + &sx.mul(&sy),
    };
    Ok(out.rescale(scale))
}

/// One row of the sine table: `sin(index * 3.75 degrees)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SineEntry {
    pub index: u32,
    pub degrees: FixedDec,
    pub value: FixedDec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SineTable {
    pub scale: u32,
    pub terms: usize,
    pub entries: Vec<SineEntry>,
}

pub const SINE_TABLE_ROWS: u32 = 24;

/// Series terms for a table correct to `scale` digits: the smallest `n` with
/// `(pi/2)^(2n+1) / (2n+1)! < 10^-(scale+1)`, using 1.5708 for `pi/2`.
pub fn sine_table_terms(scale: u32) -> usize {
    let half_pi_upper = BigNat::from_u64(15708);
    let mut n = 1u32;
    while !power_over_factorial_below(&half_pi_upper, 4, 2 * n + 1, scale + 1) {
        n += 1;
    }
    n as usize
}

/// Sines of 3.75, 7.5, ..., 90 degrees, each rounded to `scale` digits.
pub fn build_sine_table(scale: u32) -> Result<SineTable> {
    build_sine_table_with(scale, Execution::default())
}

pub fn build_sine_table_with(scale: u32, exec: Execution) -> Result<SineTable> {
    if scale < 10 {
        return Err(Error::OutOfDomain {
            what: "build_sine_table",
            value: scale.to_string(),
            bound: "scale >= 10",
        });
    }
    let terms = sine_table_terms(scale);
    let working = scale + GUARD_DIGITS;
    let indices: Vec<u32> = (1..=SINE_TABLE_ROWS).collect();
    let entries = exec
        .map(&indices, |&k| -> Result<SineEntry> {
            // k * 15/4 degrees
            let angle = Angle::from_degree_ratio(15 * k as i64, 4, working);
            let value = sin_series(&angle, terms, working)?.round_to(scale);
            let degrees = FixedDec::new(false, BigNat::from_u64(375 * k as u64), 2);
            Ok(SineEntry {
                index: k,
                degrees,
                value,
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(SineTable {
        scale,
        terms,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> FixedDec {
        s.parse().unwrap()
    }

    fn deg(v: i64, scale: u32) -> Angle {
        Angle::from_degrees(&FixedDec::from_int(v, 0), scale)
    }

    fn close(a: &FixedDec, b: &FixedDec, tol: &str) -> bool {
        a.abs_diff(b).cmp_value(&d(tol)).is_le()
    }

    #[test]
    fn degrees_to_radians() {
        let a = deg(180, 20);
        assert_eq!(a.radians().to_string(), "3.14159265358979323846");
        let b = Angle::from_degree_ratio(15 * 24, 4, 20);
        assert_eq!(b.radians().to_string(), "1.57079632679489661923");
        let neg = Angle::from_degree_ratio(-90, 1, 6);
        assert_eq!(neg.radians().to_string(), "-1.570796");
    }

    #[test]
    fn sine_values() {
        let zero = Angle::from_radians(FixedDec::zero(12));
        assert!(sin_series(&zero, 5, 12).unwrap().is_zero());
        assert_eq!(
            cos_series(&zero, 5, 12).unwrap().to_string(),
            "1.000000000000"
        );

        let s30 = sin_series(&deg(30, 12), 10, 12).unwrap();
        assert!(close(&s30, &d("0.5"), "0.000000000002"), "{s30}");
        let c60 = cos_series(&deg(60, 12), 10, 12).unwrap();
        assert!(close(&c60, &d("0.5"), "0.000000000002"), "{c60}");

        let root_half = d("0.5").isqrt(12).unwrap();
        let s45 = sin_series(&deg(45, 12), 10, 12).unwrap();
        let c45 = cos_series(&deg(45, 12), 10, 12).unwrap();
        assert!(close(&s45, &root_half, "0.000000000002"), "{s45}");
        assert!(close(&s45, &c45, "0.00000000001"));
    }

    #[test]
    fn domain_checks() {
        let big = Angle::from_radians(d("3.1416"));
        assert!(sin_series(&big, 5, 10).is_err());
        assert!(sin_series(&Angle::from_radians(d("3.1415")), 5, 10).is_ok());
        assert!(sin_series(&deg(0, 5), 0, 10).is_err());
        assert!(taylor_shift_sin(&deg(91, 10), &d("0.1"), 10).is_err());
        assert!(taylor_shift_sin(&deg(30, 10), &d("0.51"), 10).is_err());
        assert!(angle_add(&deg(60, 10), &deg(40, 10), AngleRule::SinSum, 10).is_err());
        assert!(angle_add(&deg(60, 10), &deg(40, 10), AngleRule::SinDiff, 10).is_ok());
    }

    #[test]
    fn nested_single_coefficient() {
        let c0 = d("0.125000");
        let table = CoeffTable::from_coefficients(Purpose::Cos, vec![c0.clone()]).unwrap();
        assert_eq!(nested_eval(&table, &deg(17, 6), 6), c0);
        let sin1 = CoeffTable::build(Purpose::Sin, 1, 10).unwrap();
        let v = nested_eval(&sin1, &Angle::from_radians(d("0.5")), 10);
        assert_eq!(v.to_string(), "0.5000000000");
        assert!(CoeffTable::build(Purpose::Sin, 0, 10).is_err());
    }

    #[test]
    fn coefficient_signs_and_order() {
        for purpose in [Purpose::Sin, Purpose::Cos] {
            let t = CoeffTable::build(purpose, 8, 30).unwrap();
            for (k, c) in t.coefficients().iter().enumerate() {
                assert_eq!(c.is_negative(), k % 2 == 1);
            }
            for w in t.coefficients().windows(2) {
                assert!(w[1].abs().cmp_value(&w[0].abs()).is_lt());
            }
        }
        let cached = CoeffTable::cached(Purpose::Sin, 6, 15).unwrap();
        assert!(Arc::ptr_eq(
            &cached,
            &CoeffTable::cached(Purpose::Sin, 6, 15).unwrap()
        ));
    }

    #[test]
    fn sin_squared() {
        assert!(sin_sq_series(&deg(0, 12), 10, 12).unwrap().is_zero());
        let v45 = sin_sq_series(&deg(45, 14), 10, 12).unwrap();
        assert!(close(&v45, &d("0.5"), "0.0000000001"), "{v45}");
        let v30 = sin_sq_series(&deg(30, 14), 10, 12).unwrap();
        assert!(close(&v30, &d("0.25"), "0.0000000001"), "{v30}");
    }

    #[test]
    fn shift_formulas() {
        let u = deg(30, 20);
        let h0 = FixedDec::zero(20);
        let terms = terms_for_accuracy(&u, 30);
        assert!(close(
            &taylor_shift_sin(&u, &h0, 20).unwrap(),
            &sin_series(&u, terms, 20).unwrap(),
            "0.00000000000000000001"
        ));
        let zero = Angle::from_radians(FixedDec::zero(20));
        let h = d("0.01");
        assert_eq!(
            taylor_shift_sin(&zero, &h, 12).unwrap().to_string(),
            "0.010000000000"
        );
        assert_eq!(
            taylor_shift_cos(&zero, &h, 12).unwrap().to_string(),
            "0.999950000000"
        );

        let shifted = Angle::from_radians(&u.radians().rescale(20) + &h.rescale(20));
        let truth = sin_series(&shifted, terms, 20).unwrap();
        let approx = taylor_shift_sin(&u, &h, 20).unwrap();
        assert!(close(&approx, &truth, "0.0000002"));
    }

    #[test]
    fn addition_rules() {
        let x = deg(30, 20);
        let zero = Angle::from_radians(FixedDec::zero(20));
        let sx = sin_series(&x, terms_for_accuracy(&x, 30), 20).unwrap();
        let v = angle_add(&x, &zero, AngleRule::SinSum, 20).unwrap();
        assert!(close(&v, &sx, "0.0000000000000000001"));

        let y = deg(15, 20);
        let s45 = angle_add(&x, &y, AngleRule::SinSum, 12).unwrap();
        let root_half = d("0.5").isqrt(12).unwrap();
        assert!(close(&s45, &root_half, "0.000000000001"), "{s45}");

        // cos 2x = 1 - 2 sin^2 x
        let x = deg(20, 20);
        let c2 = angle_add(&x, &x, AngleRule::CosSum, 20).unwrap();
        let s = sin_series(&x, terms_for_accuracy(&x, 30), 20).unwrap();
        let other = &FixedDec::one(20) - &s.mul(&s).mul_small(2);
        assert!(close(&c2, &other, "0.0000000000000000001"));
    }

    #[test]
    fn table_terms_and_rows() {
        // (pi/2)^15/15! = 6.7e-10 < 1e-9 while (pi/2)^13/13! = 5.7e-8
        assert_eq!(sine_table_terms(8), 7);
        let table = build_sine_table(10).unwrap();
        assert_eq!(table.entries.len(), 24);
        assert_eq!(table.entries[23].value.to_string(), "1.0000000000");
        assert_eq!(table.entries[7].value.to_string(), "0.5000000000");
        assert_eq!(table.entries[11].value.to_string(), "0.7071067812");
        assert_eq!(table.entries[0].degrees.to_string(), "3.75");
        for w in table.entries.windows(2) {
            assert!(w[1].value.cmp_value(&w[0].value).is_gt());
        }
        assert!(build_sine_table(9).is_err());
        assert_eq!(
            table,
            build_sine_table_with(10, Execution::Sequential).unwrap()
        );
    }

    #[test]
    fn reduce_into_principal_range() {
        let a = Angle::from_radians(d("7.0000000000"));
        let r = a.reduce();
        // 7 - 2pi = 0.7168146928...
        assert_eq!(r.radians().to_string(), "0.7168146928");
        let b = Angle::from_radians(d("-7.0000000000")).reduce();
        assert_eq!(b.radians().to_string(), "-0.7168146928");
    }

    #[test]
    fn rule_names() {
        for r in AngleRule::ALL {
            assert_eq!(r.name().parse::<AngleRule>().unwrap(), r);
        }
    }
}
