//! Thin switch between rayon-backed and sequential execution.
//!
//! The `parallel` feature (on by default) routes the helpers below through
//! rayon. With `--no-default-features` the same call sites run serially,
//! which is useful for profiling and for the criterion comparisons in
//! `benches/solver.rs`.

/// Map `f` over `items`, in parallel when the `parallel` feature is active.
pub fn map_indexed<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(usize, T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items
            .into_par_iter()
            .enumerate()
            .map(|(i, t)| f(i, t))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
}

/// Run `f` over mutable row chunks of a flat buffer.
///
/// `buf` is interpreted as `rows` consecutive chunks of length `row_len`;
/// `f` receives the row index and the row slice.
pub fn for_each_row<F>(buf: &mut [f64], row_len: usize, f: F)
where
    F: Fn(usize, &mut [f64]) + Sync + Send,
{
    debug_assert_eq!(buf.len() % row_len.max(1), 0);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        buf.par_chunks_mut(row_len)
            .enumerate()
            .for_each(|(i, row)| f(i, row));
    }
    #[cfg(not(feature = "parallel"))]
    {
        buf.chunks_mut(row_len).enumerate().for_each(|(i, row)| f(i, row));
    }
}
