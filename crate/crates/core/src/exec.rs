#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How data-parallel loops are run.
///
/// `Parallel` uses the rayon global pool when the crate is built with the
/// `parallel` feature and silently degrades to `Sequential` otherwise. Both
/// modes produce identical results; merges always happen in index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True if loops will actually be spread over worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// `(0..len).map(f).collect()`, possibly in parallel, always in index order.
    pub(crate) fn map_indexed<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }

    /// Maps over a slice, possibly in parallel, preserving order.
    pub(crate) fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
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
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let f = |i: usize| i * i + 1;
        let seq = Execution::Sequential.map_indexed(1000, f);
        let par = Execution::Parallel.map_indexed(1000, f);
        assert_eq!(seq, par);
        assert_eq!(seq[10], 101);
        let words = ["a", "bb", "ccc"];
        assert_eq!(Execution::Parallel.map_slice(&words, |w| w.len()), vec![1, 2, 3]);
    }
}
