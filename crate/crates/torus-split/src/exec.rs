//! Data-parallel helpers with a sequential fallback.
//!
//! Every scan below is a pure reduction (logical AND, counting, map-collect),
//! so results are identical whether the `parallel` feature is enabled or not
//! and whatever the thread count. Backtracking searches never go through this
//! module; their visit order is part of their contract.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// True iff `pred` holds for every index in `0..len`.
pub fn all_indices<F>(len: u64, pred: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().all(pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).all(pred)
    }
}

/// Number of indices in `0..len` satisfying `pred`.
pub fn count_indices<F>(len: u64, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().filter(|&i| pred(i)).count() as u64
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).filter(|&i| pred(i)).count() as u64
    }
}

/// Maps `0..len` preserving order.
pub fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

/// Runs `f` inside a thread pool of the requested size when the parallel
/// feature is on; plain call otherwise. `jobs = None` uses the default pool.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        match jobs {
            Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .expect("rayon pool")
                .install(f),
            _ => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        f()
    }
}
