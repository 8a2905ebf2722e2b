//! Signed scaled decimals: `sign * mantissa * 10^-scale`.
//!
//! Every lossy step truncates the magnitude toward zero. The only rounding
//! entry point is [`FixedDec::round_to`], used where a result is reported as
//! a nearest value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use super::nat::BigNat;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FixedDec {
    negative: bool,
    mantissa: BigNat,
    scale: u32,
}

impl FixedDec {
    /// Builds a value, forcing the sign of zero to `+`.
    pub fn new(negative: bool, mantissa: BigNat, scale: u32) -> Self {
        let negative = negative && !mantissa.is_zero();
        FixedDec {
            negative,
            mantissa,
            scale,
        }
    }

    pub fn zero(scale: u32) -> Self {
        FixedDec::new(false, BigNat::zero(), scale)
    }

    pub fn one(scale: u32) -> Self {
        FixedDec::new(false, BigNat::pow10(scale), scale)
    }

    /// One unit in the last place at `scale`.
    pub fn ulp(scale: u32) -> Self {
        FixedDec::new(false, BigNat::one(), scale)
    }

    pub fn from_int(value: i64, scale: u32) -> Self {
        let mantissa = BigNat::from_u64(value.unsigned_abs()).mul_pow10(scale);
        FixedDec::new(value < 0, mantissa, scale)
    }

    pub fn from_nat(value: &BigNat, scale: u32) -> Self {
        FixedDec::new(false, value.mul_pow10(scale), scale)
    }

    /// `floor(num * 10^scale / den) * 10^-scale` with the given sign.
    pub fn from_ratio(num: &BigNat, den: &BigNat, negative: bool, scale: u32) -> Result<Self> {
        let (q, _) = num.mul_pow10(scale).divrem(den)?;
        Ok(FixedDec::new(negative, q, scale))
    }

    /// Like [`FixedDec::from_ratio`] but rounds the magnitude up, for error bounds.
    pub(crate) fn from_ratio_ceil(num: &BigNat, den: &BigNat, scale: u32) -> Result<Self> {
        let (q, r) = num.mul_pow10(scale).divrem(den)?;
        let q = if r.is_zero() { q } else { q.add_small(1) };
        Ok(FixedDec::new(false, q, scale))
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn mantissa(&self) -> &BigNat {
        &self.mantissa
    }

    pub fn abs(&self) -> FixedDec {
        FixedDec::new(false, self.mantissa.clone(), self.scale)
    }

    /// Changes the scale; shrinking truncates toward zero, growing is exact.
    pub fn rescale(&self, scale: u32) -> FixedDec {
        let mantissa = match scale.cmp(&self.scale) {
            Ordering::Equal => return self.clone(),
            Ordering::Greater => self.mantissa.mul_pow10(scale - self.scale),
            Ordering::Less => self.mantissa.div_pow10(self.scale - scale),
        };
        FixedDec::new(self.negative, mantissa, scale)
    }

    /// Rounds to `scale` digits, ties away from zero.
    pub fn round_to(&self, scale: u32) -> FixedDec {
        if scale >= self.scale {
            return self.rescale(scale);
        }
        let drop = self.scale - scale;
        let doubled = self.mantissa.mul_small(2);
        let half_up = &doubled + &BigNat::pow10(drop);
        let mantissa = half_up.div_pow10(drop).divrem_small(2).expect("two").0;
        FixedDec::new(self.negative, mantissa, scale)
    }

    fn signed_sum(&self, other_negative: bool, other: &BigNat) -> FixedDec {
        if self.negative == other_negative {
            return FixedDec::new(self.negative, &self.mantissa + other, self.scale);
        }
        let (diff, flipped) = self.mantissa.abs_diff(other);
        FixedDec::new(self.negative ^ flipped, diff, self.scale)
    }

    pub fn checked_add(&self, other: &FixedDec) -> Result<FixedDec> {
        self.same_scale(other)?;
        Ok(self.signed_sum(other.negative, &other.mantissa))
    }

    pub fn checked_sub(&self, other: &FixedDec) -> Result<FixedDec> {
        self.same_scale(other)?;
        Ok(self.signed_sum(!other.negative, &other.mantissa))
    }

    fn same_scale(&self, other: &FixedDec) -> Result<()> {
        if self.scale == other.scale {
            Ok(())
        } else {
            Err(Error::ScaleMismatch {
                left: self.scale,
                right: other.scale,
            })
        }
    }

    /// Exact product at `self.scale + other.scale`.
    pub fn mul_exact(&self, other: &FixedDec) -> FixedDec {
        FixedDec::new(
            self.negative ^ other.negative,
            &self.mantissa * &other.mantissa,
            self.scale + other.scale,
        )
    }

    /// Product truncated back to the larger of the two input scales.
    pub fn mul(&self, other: &FixedDec) -> FixedDec {
        self.mul_exact(other).rescale(self.scale.max(other.scale))
    }

    pub fn mul_nat(&self, factor: &BigNat) -> FixedDec {
        FixedDec::new(self.negative, &self.mantissa * factor, self.scale)
    }

    pub fn mul_small(&self, factor: u32) -> FixedDec {
        FixedDec::new(self.negative, self.mantissa.mul_small(factor), self.scale)
    }

    /// Truncating division by a positive integer at the current scale.
    pub fn div_nat(&self, divisor: &BigNat) -> Result<FixedDec> {
        let (q, _) = self.mantissa.divrem(divisor)?;
        Ok(FixedDec::new(self.negative, q, self.scale))
    }

    /// Truncating quotient `self / other` at `scale`.
    pub fn div(&self, other: &FixedDec, scale: u32) -> Result<FixedDec> {
        // self.m / 10^sa  /  (other.m / 10^sb)  * 10^scale
        let num = self.mantissa.mul_pow10(other.scale + scale);
        let den = other.mantissa.mul_pow10(self.scale);
        let (q, _) = num.divrem(&den)?;
        Ok(FixedDec::new(self.negative ^ other.negative, q, scale))
    }

    /// Largest `r` at `scale` with `r^2 <= self`.
    pub fn isqrt(&self, scale: u32) -> Result<FixedDec> {
        if self.negative {
            return Err(Error::NegativeSqrt);
        }
        let target = 2 * scale;
        let radicand = if target >= self.scale {
            self.mantissa.mul_pow10(target - self.scale)
        } else {
            self.mantissa.div_pow10(self.scale - target)
        };
        Ok(FixedDec::new(false, radicand.isqrt(), scale))
    }

    /// Value comparison across any scales.
    pub fn cmp_value(&self, other: &FixedDec) -> Ordering {
        let s = self.scale.max(other.scale);
        let (a, b) = (self.rescale(s), other.rescale(s));
        match (a.negative, b.negative) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, false) => a.mantissa.cmp(&b.mantissa),
            (true, true) => b.mantissa.cmp(&a.mantissa),
        }
    }

    /// `|self - other|` at the larger scale, exact.
    pub fn abs_diff(&self, other: &FixedDec) -> FixedDec {
        let s = self.scale.max(other.scale);
        (&self.rescale(s) - &other.rescale(s)).abs()
    }

    /// Integer nearest to the value, ties away from zero, as (negative, magnitude).
    pub fn round_to_integer(&self) -> (bool, BigNat) {
        let r = self.round_to(0);
        (r.negative, r.mantissa)
    }

    /// The `index`-th digit after the decimal point (1-based), if within scale.
    pub fn fraction_digit(&self, index: u32) -> Option<u8> {
        if index == 0 || index > self.scale {
            return None;
        }
        let s = self.to_string();
        let frac = s.split('.').nth(1)?;
        frac.as_bytes().get(index as usize - 1).map(|b| b - b'0')
    }
}

impl Add for &FixedDec {
    type Output = FixedDec;

    /// Panics on a scale mismatch; [`FixedDec::checked_add`] reports it instead.
    fn add(self, other: &FixedDec) -> FixedDec {
        self.checked_add(other)
            .expect("FixedDec add with mismatched scales")
    }
}

impl Sub for &FixedDec {
    type Output = FixedDec;

    fn sub(self, other: &FixedDec) -> FixedDec {
        self.checked_sub(other)
            .expect("FixedDec sub with mismatched scales")
    }
}

impl Neg for &FixedDec {
    type Output = FixedDec;

    fn neg(self) -> FixedDec {
        FixedDec::new(!self.negative, self.mantissa.clone(), self.scale)
    }
}

impl fmt::Display for FixedDec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.to_string();
        let scale = self.scale as usize;
        let mut out = String::with_capacity(digits.len() + 3);
        if self.negative {
            out.push('-');
        }
        if scale == 0 {
            out.push_str(&digits);
        } else {
            let padded = if digits.len() <= scale {
                format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
            } else {
                digits
            };
            let (int, frac) = padded.split_at(padded.len() - scale);
            out.push_str(int);
            out.push('.');
            out.push_str(frac);
        }
        f.pad(&out)
    }
}

impl fmt::Debug for FixedDec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FixedDec({self})")
    }
}

impl FromStr for FixedDec {
    type Err = Error;

    /// Accepts `[+-]?digits(.digits)?`; the scale is the number of fraction digits.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int, frac) = match body.split_once('.') {
            Some((i, f)) if !f.is_empty() => (i, f),
            Some(_) => return Err(bad()),
            None => (body, ""),
        };
        if int.is_empty() {
            return Err(bad());
        }
        let mantissa: BigNat = format!("{int}{frac}").parse().map_err(|_| bad())?;
        Ok(FixedDec::new(negative, mantissa, frac.len() as u32))
    }
}
