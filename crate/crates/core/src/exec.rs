//! Execution strategy for the data-parallel loops (enumeration, brute force,
//! orbit canonicalization). With the `parallel` feature disabled every
//! strategy runs sequentially.

/// How data-parallel loops are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `0..n` and keeps the `Some` results, in index order.
pub(crate) fn filter_map_range<T, F>(exec: Execution, n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    (0..n).filter_map(f).collect()
}

/// Number of `k` in `0..n` with `pred(k)`.
pub(crate) fn count_range<F>(exec: Execution, n: u64, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().filter(|&k| pred(k)).count() as u64;
    }
    let _ = exec;
    (0..n).filter(|&k| pred(k)).count() as u64
}

/// Maps `f` over a slice, keeping order.
pub(crate) fn map_slice<S, T, F>(exec: Execution, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}
