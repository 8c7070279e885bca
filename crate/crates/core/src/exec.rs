//! Index-ordered map-collect helpers shared by the audit and ranking loops.
//!
//! With the `parallel` feature the indexed variant fans out over rayon;
//! without it, both variants run the same sequential loop. Results are
//! always collected in index order, so callers see identical output either
//! way and reductions that depend on "first" stay deterministic.

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_collect_seq(count, f)
}

/// Sequential twin of [`map_collect`], available regardless of features so
/// equivalence tests and benchmarks can pin the baseline path.
pub(crate) fn map_collect_seq<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).map(f).collect()
}
