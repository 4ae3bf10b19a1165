//! Execution seam for the data-parallel scans.
//!
//! Every hot loop in this crate is an independent map over an index range.
//! With the `parallel` feature these helpers fan out over rayon; without it
//! (or with `parallel: false`) they run sequentially. Collected output is in
//! index order either way, so results are bit-identical across modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn scan_collect<T, F>(n: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().filter_map(&f).collect();
    }
    let _ = parallel;
    (0..n).filter_map(f).collect()
}

pub(crate) fn scan_sum<F>(n: usize, parallel: bool, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().map(&f).sum();
    }
    let _ = parallel;
    (0..n).map(f).sum()
}
