//! Execution-mode switch for the data-parallel inner loops.
//!
//! With the `parallel` feature (the default) the heavy scans run on rayon;
//! without it, or with the mode set to [`ExecMode::Sequential`], they run as
//! plain iterator chains. Results are collected in input order either way, so
//! the output is identical across modes.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

static MODE: AtomicU8 = AtomicU8::new(1);

pub fn set_exec_mode(mode: ExecMode) {
    MODE.store(
        if mode == ExecMode::Parallel { 1 } else { 0 },
        Ordering::Relaxed,
    );
}

pub fn exec_mode() -> ExecMode {
    if MODE.load(Ordering::Relaxed) == 1 {
        ExecMode::Parallel
    } else {
        ExecMode::Sequential
    }
}

/// Map over an index range, preserving order.
#[cfg(feature = "parallel")]
pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    if exec_mode() == ExecMode::Parallel {
        range.into_par_iter().map(f).collect()
    } else {
        range.map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    range.map(f).collect()
}

/// Map over a slice, preserving order.
#[cfg(feature = "parallel")]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    if exec_mode() == ExecMode::Parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Bound worker parallelism: `jobs == 1` switches to sequential execution,
/// larger values size the global worker pool (first call wins).
#[cfg(feature = "parallel")]
pub fn configure_threads(jobs: usize) {
    if jobs <= 1 {
        set_exec_mode(ExecMode::Sequential);
    } else {
        set_exec_mode(ExecMode::Parallel);
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_jobs: usize) {
    set_exec_mode(ExecMode::Sequential);
}

/// Run `f` with the given mode, restoring the previous mode afterwards.
pub fn with_mode<R>(mode: ExecMode, f: impl FnOnce() -> R) -> R {
    let prev = exec_mode();
    set_exec_mode(mode);
    let out = f();
    set_exec_mode(prev);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let seq = with_mode(ExecMode::Sequential, || map_range(0..100, |i| i * i));
        let par = with_mode(ExecMode::Parallel, || map_range(0..100, |i| i * i));
        assert_eq!(seq, par);
        let items: Vec<u64> = (0..50).collect();
        let a = with_mode(ExecMode::Sequential, || map_slice(&items, |x| x + 1));
        let b = with_mode(ExecMode::Parallel, || map_slice(&items, |x| x + 1));
        assert_eq!(a, b);
    }
}
