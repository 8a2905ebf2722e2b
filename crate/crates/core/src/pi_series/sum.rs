//! Exact summation of truncated rational terms.
//!
//! Each term `num / den` is truncated to the working scale on its own and the
//! truncated mantissas are added exactly, so any grouping of the terms gives
//! the same bits. Terms whose scaled numerator and denominator fit a machine
//! word take a native-division path.

use std::ops::Range;

use crate::bigfixed::{BigNat, FixedDec};
use crate::par::Execution;

/// Below this many terms the sum is never split.
const CHUNK: u64 = 1 << 14;
const FLUSH_AT: u128 = 1 << 120;

pub(crate) enum Den {
    Small(u128),
    Big(BigNat),
}

impl Den {
    /// Uses the native value when the checked computation did not overflow.
    pub(crate) fn pick(small: Option<u128>, big: impl FnOnce() -> BigNat) -> Den {
        match small {
            Some(d) => Den::Small(d),
            None => Den::Big(big()),
        }
    }
}

pub(crate) struct Term {
    pub negative: bool,
    pub num: u32,
    pub den: Den,
}

#[derive(Default)]
struct Partial {
    pos: BigNat,
    neg: BigNat,
}

fn partial<F>(range: Range<u64>, scale: u32, term: &F) -> Partial
where
    F: Fn(u64) -> Term,
{
    let unit = 10u128.checked_pow(scale);
    let mut out = Partial::default();
    let (mut small_pos, mut small_neg) = (0u128, 0u128);

    for k in range {
        let t = term(k);
        let fast = match (&t.den, unit) {
            (Den::Small(d), Some(unit)) => (t.num as u128).checked_mul(unit).map(|n| {
                if n <= u64::MAX as u128 && *d <= u64::MAX as u128 {
                    ((n as u64) / (*d as u64)) as u128
                } else {
                    n / d
                }
            }),
            _ => None,
        };
        match fast {
            Some(q) => {
                let slot = if t.negative {
                    &mut small_neg
                } else {
                    &mut small_pos
                };
                *slot += q;
                if *slot >= FLUSH_AT {
                    let acc = if t.negative {
                        &mut out.neg
                    } else {
                        &mut out.pos
                    };
                    *acc = &*acc + &BigNat::from_u128(*slot);
                    *slot = 0;
                }
            }
            None => {
                let den = match t.den {
                    Den::Small(d) => BigNat::from_u128(d),
                    Den::Big(d) => d,
                };
                let (q, _) = BigNat::from_u64(t.num as u64)
                    .mul_pow10(scale)
                    .divrem(&den)
                    .expect("series denominators are positive");
                let acc = if t.negative {
                    &mut out.neg
                } else {
                    &mut out.pos
                };
                *acc = &*acc + &q;
            }
        }
    }
    out.pos = &out.pos + &BigNat::from_u128(small_pos);
    out.neg = &out.neg + &BigNat::from_u128(small_neg);
    out
}

/// Sum of `term(k)` for `k` in `range`, every term truncated at `scale`.
pub(crate) fn sum_terms<F>(range: Range<u64>, scale: u32, exec: Execution, term: F) -> FixedDec
where
    F: Fn(u64) -> Term + Sync + Send,
{
    let len = range.end.saturating_sub(range.start);
    let parts = if exec.is_parallel() && len > CHUNK {
        exec.map_chunks(range, CHUNK, |r| partial(r, scale, &term))
    } else {
        vec![partial(range, scale, &term)]
    };
    let (pos, neg) = parts
        .into_iter()
        .fold((BigNat::zero(), BigNat::zero()), |(p, n), part| {
            (&p + &part.pos, &n + &part.neg)
        });
    let (magnitude, negative) = pos.abs_diff(&neg);
    FixedDec::new(negative, magnitude, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn harmonic_alternating(k: u64) -> Term {
        Term {
            negative: k.is_multiple_of(2),
            num: 1,
            den: Den::Small(k as u128),
        }
    }

    #[test]
    fn fast_and_big_paths_agree() {
        let fast = sum_terms(1..200, 20, Execution::Sequential, harmonic_alternating);
        let slow = sum_terms(1..200, 20, Execution::Sequential, |k| Term {
            negative: k.is_multiple_of(2),
            num: 1,
            den: Den::Big(BigNat::from_u64(k)),
        });
        assert_eq!(fast, slow);
        // scale beyond u128 forces the big path for every term
        let wide = sum_terms(1..200, 45, Execution::Sequential, harmonic_alternating);
        let drift = wide.rescale(20).abs_diff(&fast);
        assert!(drift.mantissa() <= &BigNat::from_u64(200), "{drift}");
    }

    #[test]
    fn chunked_sum_is_bit_identical() {
        let n = 3 * CHUNK + 17;
        let seq = sum_terms(1..n, 18, Execution::Sequential, harmonic_alternating);
        let par = sum_terms(1..n, 18, Execution::Parallel, harmonic_alternating);
        assert_eq!(seq, par);
    }
}
