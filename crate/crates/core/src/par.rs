//! Data-parallel helpers with a sequential fallback.
//!
//! Without the `parallel` feature, [`Execution::Parallel`] runs on the
//! calling thread. Results are always returned in input order, so both
//! strategies produce identical output.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Ordered map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Ordered map over an integer range.
    pub fn map_range<R, F>(self, range: Range<u64>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// Splits `range` into consecutive chunks of at most `chunk` elements and
    /// maps each chunk; the output follows range order.
    pub fn map_chunks<R, F>(self, range: Range<u64>, chunk: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(Range<u64>) -> R + Sync + Send,
    {
        let chunk = chunk.max(1);
        let count = (range.end.saturating_sub(range.start)).div_ceil(chunk);
        let start = range.start;
        let end = range.end;
        self.map_range(0..count, |i| {
            let lo = start + i * chunk;
            f(lo..(lo + chunk).min(end))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Execution::Sequential.map(&items, |x| x * x);
        let par = Execution::Parallel.map(&items, |x| x * x);
        assert_eq!(seq, par);
    }

    #[test]
    fn chunks_cover_range() {
        let parts = Execution::Parallel.map_chunks(3..20, 5, |r| (r.start, r.end));
        assert_eq!(parts, vec![(3, 8), (8, 13), (13, 18), (18, 20)]);
        assert!(Execution::Sequential.map_chunks(5..5, 4, |r| r).is_empty());
    }
}
