//! Data-parallel helpers.
//!
//! With the `parallel` feature (on by default) these run on the rayon pool;
//! without it, or after [`set_sequential`]`(true)`, they run in order on the
//! calling thread. Every helper returns results in input order, so callers
//! stay bit-deterministic either way.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Forces the sequential path at runtime (used by the benches to compare both).
pub fn set_sequential(flag: bool) {
    FORCE_SEQUENTIAL.store(flag, Ordering::Relaxed);
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::Relaxed)
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Applies `f(index, item)` to every element. `min_len` bounds the chunk size
/// handed to a single worker.
pub fn for_each_mut<T, F>(items: &mut [T], min_len: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() && items.len() >= 2 * min_len.max(1) {
        use rayon::prelude::*;
        items
            .par_iter_mut()
            .with_min_len(min_len.max(1))
            .enumerate()
            .for_each(|(i, x)| f(i, x));
        return;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = min_len;
    items.iter_mut().enumerate().for_each(|(i, x)| f(i, x));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_preserve_order() {
        let v: Vec<u64> = (0..1000).collect();
        assert_eq!(map(&v, |x| x * 2), v.iter().map(|x| x * 2).collect::<Vec<_>>());
        assert_eq!(map_range(10, |i| i * i), vec![0, 1, 4, 9, 16, 25, 36, 49, 64, 81]);
        let mut w = v.clone();
        for_each_mut(&mut w, 8, |i, x| *x += i as u64);
        assert_eq!(w[999], 1998);
    }
}
