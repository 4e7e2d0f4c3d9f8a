//! Execution policy for the data-parallel loops.
//!
//! With the `parallel` feature (default) `Exec::Parallel` runs on the rayon
//! global pool; without it every policy degrades to the sequential path.
//! Results never depend on the policy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Policy for a worker count: `Some(1)` is sequential, `Some(k)` sizes
    /// the global pool to `k` threads (first call wins), `None` uses every core.
    pub fn with_workers(workers: Option<usize>) -> Exec {
        match workers {
            Some(1) => Exec::Sequential,
            #[cfg(feature = "parallel")]
            Some(k) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
                Exec::Parallel
            }
            _ => Exec::Parallel,
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Order-preserving map with per-worker scratch state.
    pub fn map_init<T, S, R, I, F>(self, items: &[T], init: I, f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        I: Fn() -> S + Sync + Send,
        F: Fn(&mut S, &T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map_init(&init, |s, t| f(s, t)).collect();
        }
        let mut state = init();
        items.iter().map(|t| f(&mut state, t)).collect()
    }

    /// Map over `0..len` followed by an associative reduction.
    pub fn map_reduce<R, F, Op>(self, len: usize, identity: R, f: F, op: Op) -> R
    where
        R: Send + Sync + Clone,
        F: Fn(usize) -> R + Sync + Send,
        Op: Fn(R, R) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len).into_par_iter().map(f).reduce(|| identity.clone(), op);
        }
        (0..len).map(f).fold(identity, op)
    }
}
