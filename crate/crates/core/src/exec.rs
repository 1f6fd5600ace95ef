//! Execution strategy for the data-parallel loops (oracle enumeration,
//! Burnside sums, table and classification sweeps).
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] fans work out
//! over rayon's global pool. Without it every strategy runs sequentially, so
//! results never depend on which one was chosen.

use std::ops::Range;

/// How a data-parallel loop is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// True when this strategy actually runs on more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `items`, preserving input order in the output.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Splits `range` into contiguous chunks of `chunk` values, folds each chunk
    /// with `fold`, then combines the partial results with `combine`.
    ///
    /// `combine` must be associative and `identity` its neutral element; the
    /// result is then independent of the chunking and of thread scheduling.
    pub fn fold_range<T, F, C>(self, range: Range<u64>, chunk: u64, identity: T, fold: F, combine: C) -> T
    where
        T: Send + Sync + Clone,
        F: Fn(Range<u64>) -> T + Sync + Send,
        C: Fn(T, T) -> T + Sync + Send,
    {
        let chunk = chunk.max(1);
        let starts: Vec<u64> = (range.start..range.end).step_by(chunk as usize).collect();
        let piece = |&s: &u64| fold(s..(s.saturating_add(chunk)).min(range.end));

        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            let parts: Vec<T> = starts.par_iter().map(piece).collect();
            return parts.into_iter().fold(identity, &combine);
        }
        starts.iter().map(piece).fold(identity, combine)
    }
}

/// Runs `f` on a dedicated pool of `threads` workers. With the `parallel`
/// feature disabled, or `threads == 1`, `f` simply runs on the caller.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if threads > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            return pool.install(f);
        }
    }
    let _ = threads;
    f()
}
