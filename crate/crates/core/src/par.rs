//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it every helper runs sequentially with the same results.

use crate::exactlin::Scalar;

/// How a batch should be executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when the `parallel` feature is off.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<R, F>(exec: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

/// Runs `a` and `b`, concurrently when parallel execution is available.
pub fn join<A, B, RA, RB>(exec: Execution, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => rayon::join(a, b),
        _ => (a(), b()),
    }
}

/// Below this many entries, elimination stays on one thread.
const PAR_ELIM_THRESHOLD: usize = 16_384;

/// Clears column `c` in every row except `pivot`, using the normalized pivot
/// row restricted to columns `c..`.
pub(crate) fn eliminate_rows(
    data: &mut [Scalar],
    cols: usize,
    pivot: usize,
    c: usize,
    pivot_row: &[Scalar],
) {
    let step = |(i, row): (usize, &mut [Scalar])| {
        if i == pivot || row[c].is_zero() {
            return;
        }
        let factor = row[c].clone();
        for (j, pv) in pivot_row.iter().enumerate() {
            if !pv.is_zero() {
                let v = &row[c + j] - &(&factor * pv);
                row[c + j] = v;
            }
        }
    };
    #[cfg(feature = "parallel")]
    if data.len() >= PAR_ELIM_THRESHOLD {
        use rayon::prelude::*;
        data.par_chunks_mut(cols).enumerate().for_each(step);
        return;
    }
    let _ = PAR_ELIM_THRESHOLD;
    data.chunks_mut(cols).enumerate().for_each(step);
}
