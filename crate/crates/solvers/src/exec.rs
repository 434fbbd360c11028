//! Sequential and data-parallel execution of per-strategy membership tests.
//!
//! Every solver loops "for each candidate strategy, run an exact test" within
//! a level. That loop is what parallelizes; results are collected back in
//! candidate order, so both backends produce identical output, and the first
//! error by candidate order wins either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use game_core::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Execution::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Execution::Sequential
        }
    }
}

/// Map a fallible function over items, in order.
pub fn map_items<T, U, F>(exec: Execution, items: &[T], f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            let out: Vec<Result<U>> = items.par_iter().map(f).collect();
            out.into_iter().collect()
        }
    }
}

/// Keep the candidates whose predicate holds, preserving order.
pub fn filter_pool<F>(exec: Execution, pool: &[usize], pred: F) -> Result<Vec<usize>>
where
    F: Fn(usize) -> Result<bool> + Sync + Send,
{
    let verdicts = map_items(exec, pool, |&s| pred(s))?;
    Ok(pool
        .iter()
        .zip(verdicts)
        .filter_map(|(&s, keep)| keep.then_some(s))
        .collect())
}
