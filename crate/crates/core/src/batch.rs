//! Batch evaluation over graph corpora. With the `parallel` feature
//! (default) the work is spread across threads with rayon; otherwise it
//! runs sequentially. Results are in input order either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{self, CycleStats};

pub fn map_sequential<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_parallel<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Apply `f` to every item, in parallel when the feature allows.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_parallel(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

/// Cycle statistics for a whole corpus.
pub fn cycle_stats_all(graphs: &[Graph], limit: usize) -> Vec<Result<CycleStats>> {
    map(graphs, |g| oracle::cycle_stats(g, limit))
}

/// Exact chromatic numbers for a whole corpus.
pub fn chromatic_all(graphs: &[Graph], limit: usize) -> Vec<Result<usize>> {
    map(graphs, |g| oracle::chromatic_number_exact(g, limit).map(|(k, _)| k))
}
