//! A-priori truncation bounds and the term counts they imply.
//!
//! For the alternating series the bound is the first omitted term (times the
//! normalization). The all-positive series B is bounded through
//! `(4k-3)(4k-1) >= 16k(k-1)`, which telescopes to a tail of at most `1/(2n)`.

use super::SeriesId;
use crate::bigfixed::{BigNat, FixedDec};
use crate::error::{Error, Result};

/// Largest term count `terms_for_digits` will return.
pub const DEFAULT_TERM_CAP: u64 = 100_000_000;

fn nat(v: u64) -> BigNat {
    BigNat::from_u64(v)
}

/// Bound after `n` terms as an exact ratio (numerator, denominator).
/// For sqrt12 the numerator is `sqrt(12)` and is handled by the callers.
fn bound_ratio(series: SeriesId, n: u64) -> (BigNat, BigNat) {
    let n = nat(n);
    match series {
        SeriesId::Leibniz => (nat(4), n.mul_small(2).add_small(1)),
        SeriesId::AuxA => {
            let m = n.mul_small(2).add_small(3);
            (nat(4), &m.pow(3) - &m)
        }
        SeriesId::AuxB => (BigNat::one(), n.mul_small(2)),
        SeriesId::AuxC => {
            let m = n.mul_small(2).add_small(1);
            (nat(16), &m.pow(5) + &m.mul_small(4))
        }
        SeriesId::AuxD => {
            let m = n.mul_small(2).add_small(2);
            (nat(4), &m.pow(2) - &BigNat::one())
        }
        SeriesId::Sqrt12 => {
            let exp = u32::try_from(n.to_u64().unwrap()).expect("term count fits u32");
            (
                BigNat::one(),
                &n.mul_small(2).add_small(1) * &nat(3).pow(exp),
            )
        }
    }
}

/// Whether the bound after `n` terms is strictly below `10^-digits`.
fn bound_below(series: SeriesId, n: u64, digits: u32) -> bool {
    let (num, den) = bound_ratio(series, n);
    match series {
        // sqrt(12)/den < 10^-d  <=>  12 * 10^(2d) < den^2
        SeriesId::Sqrt12 => nat(12).mul_pow10(2 * digits) < &den * &den,
        _ => num.mul_pow10(digits) < den,
    }
}

/// Bound after `n` terms at `scale`, rounded up.
pub(crate) fn error_bound(series: SeriesId, n: u64, scale: u32) -> Result<FixedDec> {
    let (num, den) = bound_ratio(series, n);
    match series {
        SeriesId::Sqrt12 => {
            let root_upper = nat(12).mul_pow10(2 * scale).isqrt().add_small(1);
            FixedDec::from_ratio_ceil(&root_upper, &den.mul_pow10(scale), scale)
        }
        _ => FixedDec::from_ratio_ceil(&num, &den, scale),
    }
}

/// Smallest `n` whose bound is below `10^-digits`, capped at [`DEFAULT_TERM_CAP`].
pub fn terms_for_digits(series: SeriesId, digits: u32) -> Result<u64> {
    terms_for_digits_capped(series, digits, DEFAULT_TERM_CAP)
}

pub fn terms_for_digits_capped(series: SeriesId, digits: u32, cap: u64) -> Result<u64> {
    if digits == 0 {
        return Err(Error::OutOfDomain {
            what: "terms_for_digits",
            value: "0".into(),
            bound: "digits >= 1",
        });
    }
    let infeasible = Error::Infeasible {
        series: series.name(),
        digits,
        cap,
    };
    if cap == 0 {
        return Err(infeasible);
    }
    // the bound is decreasing in n: gallop up, then bisect
    let mut hi = 1u64;
    while !bound_below(series, hi, digits) {
        if hi >= cap {
            return Err(infeasible);
        }
        hi = hi.saturating_mul(2).min(cap);
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if bound_below(series, mid, digits) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
