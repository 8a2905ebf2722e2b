//! Unbounded non-negative integers stored as base-10^9 limbs.
//!
//! Limbs are little-endian and the canonical zero is the empty vector, so a
//! non-empty value always has a nonzero top limb. The decimal base keeps
//! scaling by powers of ten down to a limb shift plus one short multiply.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) const BASE: u64 = 1_000_000_000;
pub(crate) const BASE_DIGITS: u32 = 9;

const POW10: [u32; 10] = [
    1,
    10,
    100,
    1_000,
    10_000,
    100_000,
    1_000_000,
    10_000_000,
    100_000_000,
    1_000_000_000,
];

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BigNat {
    limbs: Vec<u32>,
}

impl BigNat {
    pub fn zero() -> Self {
        BigNat { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        BigNat::from_u64(1)
    }

    fn from_limbs(mut limbs: Vec<u32>) -> Self {
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        BigNat { limbs }
    }

    pub fn from_u64(value: u64) -> Self {
        BigNat::from_u128(value as u128)
    }

    pub fn from_u128(mut value: u128) -> Self {
        let mut limbs = Vec::new();
        while value > 0 {
            limbs.push((value % BASE as u128) as u32);
            value /= BASE as u128;
        }
        BigNat { limbs }
    }

    /// `10^exp`.
    pub fn pow10(exp: u32) -> Self {
        let mut limbs = vec![0; (exp / BASE_DIGITS) as usize];
        limbs.push(POW10[(exp % BASE_DIGITS) as usize]);
        BigNat { limbs }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BigNat::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn limbs(&self) -> &[u32] {
        &self.limbs
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_u128().and_then(|v| u64::try_from(v).ok())
    }

    pub fn to_u128(&self) -> Option<u128> {
        if self.limbs.len() > 5 {
            return None;
        }
        let mut acc: u128 = 0;
        for &limb in self.limbs.iter().rev() {
            acc = acc.checked_mul(BASE as u128)?.checked_add(limb as u128)?;
        }
        Some(acc)
    }

    /// Number of decimal digits; zero has one digit.
    pub fn decimal_digits(&self) -> u32 {
        match self.limbs.last() {
            None => 1,
            Some(&top) => {
                let top_digits = POW10.iter().take_while(|&&p| p <= top).count() as u32;
                (self.limbs.len() as u32 - 1) * BASE_DIGITS + top_digits
            }
        }
    }

    pub fn is_even(&self) -> bool {
        self.limbs.first().is_none_or(|l| l % 2 == 0)
    }

    pub fn checked_sub(&self, other: &BigNat) -> Option<BigNat> {
        if *self < *other {
            return None;
        }
        let mut out = Vec::with_capacity(self.limbs.len());
        let mut borrow = 0i64;
        for (i, &limb) in self.limbs.iter().enumerate() {
            let mut t = limb as i64 - borrow - *other.limbs.get(i).unwrap_or(&0) as i64;
            if t < 0 {
                t += BASE as i64;
                borrow = 1;
            } else {
                borrow = 0;
            }
            out.push(t as u32);
        }
        Some(BigNat::from_limbs(out))
    }

    /// `|self - other|` together with whether `self < other`.
    pub fn abs_diff(&self, other: &BigNat) -> (BigNat, bool) {
        match self.cmp(other) {
            Ordering::Less => (other.checked_sub(self).unwrap(), true),
            _ => (self.checked_sub(other).unwrap(), false),
        }
    }

    pub fn mul_small(&self, factor: u32) -> BigNat {
        if factor == 0 || self.is_zero() {
            return BigNat::zero();
        }
        let mut out = Vec::with_capacity(self.limbs.len() + 1);
        let mut carry = 0u64;
        for &limb in &self.limbs {
            let t = limb as u64 * factor as u64 + carry;
            out.push((t % BASE) as u32);
            carry = t / BASE;
        }
        while carry > 0 {
            out.push((carry % BASE) as u32);
            carry /= BASE;
        }
        BigNat::from_limbs(out)
    }

    pub fn add_small(&self, addend: u32) -> BigNat {
        self + &BigNat::from_u64(addend as u64)
    }

    /// Quotient and remainder by a nonzero single word.
    pub fn divrem_small(&self, divisor: u32) -> Result<(BigNat, u32)> {
        if divisor == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut out = vec![0u32; self.limbs.len()];
        let mut rem = 0u64;
        for i in (0..self.limbs.len()).rev() {
            let cur = rem * BASE + self.limbs[i] as u64;
            out[i] = (cur / divisor as u64) as u32;
            rem = cur % divisor as u64;
        }
        Ok((BigNat::from_limbs(out), rem as u32))
    }

    /// `self * 10^exp`.
    pub fn mul_pow10(&self, exp: u32) -> BigNat {
        if self.is_zero() {
            return BigNat::zero();
        }
        let shifted = self.mul_small(POW10[(exp % BASE_DIGITS) as usize]);
        let mut limbs = vec![0u32; (exp / BASE_DIGITS) as usize];
        limbs.extend_from_slice(&shifted.limbs);
        BigNat { limbs }
    }

    /// `floor(self / 10^exp)`.
    pub fn div_pow10(&self, exp: u32) -> BigNat {
        let skip = (exp / BASE_DIGITS) as usize;
        if skip >= self.limbs.len() {
            return BigNat::zero();
        }
        let shifted = BigNat::from_limbs(self.limbs[skip..].to_vec());
        shifted
            .divrem_small(POW10[(exp % BASE_DIGITS) as usize])
            .expect("nonzero power of ten")
            .0
    }

    /// Exact `(q, r)` with `self = q * divisor + r` and `r < divisor`.
    pub fn divrem(&self, divisor: &BigNat) -> Result<(BigNat, BigNat)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self < divisor {
            return Ok((BigNat::zero(), self.clone()));
        }
        if let (Some(a), Some(b)) = (self.to_u128(), divisor.to_u128()) {
            return Ok((BigNat::from_u128(a / b), BigNat::from_u128(a % b)));
        }
        if divisor.limbs.len() == 1 {
            let (q, r) = self.divrem_small(divisor.limbs[0])?;
            return Ok((q, BigNat::from_u64(r as u64)));
        }
        Ok(long_division(&self.limbs, &divisor.limbs))
    }

    /// Largest `r` with `r * r <= self` (Newton iteration from above).
    pub fn isqrt(&self) -> BigNat {
        if self.is_zero() {
            return BigNat::zero();
        }
        let mut x = BigNat::pow10(self.decimal_digits().div_ceil(2));
        loop {
            let (q, _) = self.divrem(&x).expect("x > 0");
            let y = (&x + &q).divrem_small(2).expect("nonzero").0;
            if y >= x {
                return x;
            }
            x = y;
        }
    }
}

/// Knuth's algorithm D in base 10^9; `v` has at least two limbs and `u >= v`.
fn long_division(u: &[u32], v: &[u32]) -> (BigNat, BigNat) {
    let n = v.len();
    let m = u.len() - n;
    let norm = (BASE / (v[n - 1] as u64 + 1)) as u32;

    let mut un = BigNat::from_limbs(u.to_vec()).mul_small(norm).limbs;
    un.resize(u.len() + 1, 0);
    let vn = BigNat::from_limbs(v.to_vec()).mul_small(norm).limbs;
    debug_assert_eq!(vn.len(), n);

    let top = vn[n - 1] as u64;
    let second = vn[n - 2] as u64;
    let mut quotient = vec![0u32; m + 1];

    for j in (0..=m).rev() {
        let num = un[j + n] as u64 * BASE + un[j + n - 1] as u64;
        let mut qhat = num / top;
        let mut rhat = num % top;
        while qhat >= BASE || qhat * second > rhat * BASE + un[j + n - 2] as u64 {
            qhat -= 1;
            rhat += top;
            if rhat >= BASE {
                break;
            }
        }

        let mut borrow = 0i64;
        let mut carry = 0u64;
        for i in 0..n {
            let p = qhat * vn[i] as u64 + carry;
            carry = p / BASE;
            let mut t = un[i + j] as i64 - (p % BASE) as i64 - borrow;
            if t < 0 {
                t += BASE as i64;
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = t as u32;
        }
        let t = un[j + n] as i64 - carry as i64 - borrow;
        if t < 0 {
            // qhat was one too large: add the divisor back
            un[j + n] = (t + BASE as i64) as u32;
            qhat -= 1;
            let mut carry = 0u64;
            for i in 0..n {
                let s = un[i + j] as u64 + vn[i] as u64 + carry;
                un[i + j] = (s % BASE) as u32;
                carry = s / BASE;
            }
            un[j + n] = ((un[j + n] as u64 + carry) % BASE) as u32;
        } else {
            un[j + n] = t as u32;
        }
        quotient[j] = qhat as u32;
    }

    un.truncate(n);
    let (rem, _) = BigNat::from_limbs(un)
        .divrem_small(norm)
        .expect("normalizer is nonzero");
    (BigNat::from_limbs(quotient), rem)
}

impl Ord for BigNat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for BigNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &BigNat {
    type Output = BigNat;

    fn add(self, other: &BigNat) -> BigNat {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Vec::with_capacity(long.limbs.len() + 1);
        let mut carry = 0u64;
        for (i, &limb) in long.limbs.iter().enumerate() {
            let t = limb as u64 + *short.limbs.get(i).unwrap_or(&0) as u64 + carry;
            out.push((t % BASE) as u32);
            carry = t / BASE;
        }
        if carry > 0 {
            out.push(carry as u32);
        }
        BigNat { limbs: out }
    }
}

impl Sub for &BigNat {
    type Output = BigNat;

    /// Panics when `other > self`; use [`BigNat::checked_sub`] otherwise.
    fn sub(self, other: &BigNat) -> BigNat {
        self.checked_sub(other)
            .expect("BigNat subtraction underflow")
    }
}

impl Mul for &BigNat {
    type Output = BigNat;

    fn mul(self, other: &BigNat) -> BigNat {
        if self.is_zero() || other.is_zero() {
            return BigNat::zero();
        }
        let mut acc = vec![0u64; self.limbs.len() + other.limbs.len()];
        for (i, &a) in self.limbs.iter().enumerate() {
            let mut carry = 0u64;
            for (j, &b) in other.limbs.iter().enumerate() {
                let t = acc[i + j] + a as u64 * b as u64 + carry;
                acc[i + j] = t % BASE;
                carry = t / BASE;
            }
            let mut k = i + other.limbs.len();
            while carry > 0 {
                let t = acc[k] + carry;
                acc[k] = t % BASE;
                carry = t / BASE;
                k += 1;
            }
        }
        BigNat::from_limbs(acc.into_iter().map(|l| l as u32).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for BigNat {
            type Output = BigNat;
            fn $method(self, other: BigNat) -> BigNat {
                (&self).$method(&other)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<u64> for BigNat {
    fn from(value: u64) -> Self {
        BigNat::from_u64(value)
    }
}

impl fmt::Display for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut iter = self.limbs.iter().rev();
        match iter.next() {
            None => f.pad("0"),
            Some(top) => {
                let mut s = top.to_string();
                for limb in iter {
                    s.push_str(&format!("{limb:09}"));
                }
                f.pad(&s)
            }
        }
    }
}

impl fmt::Debug for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigNat({self})")
    }
}

impl FromStr for BigNat {
    type Err = Error;

    /// Plain ASCII decimal digits; no sign or separators.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(s.to_string()));
        }
        let bytes = s.as_bytes();
        let mut limbs = Vec::with_capacity(bytes.len() / 9 + 1);
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(BASE_DIGITS as usize);
            let chunk = std::str::from_utf8(&bytes[start..end]).unwrap();
            limbs.push(chunk.parse::<u32>().unwrap());
            end = start;
        }
        Ok(BigNat::from_limbs(limbs))
    }
}
