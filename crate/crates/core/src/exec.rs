//! Sequential and data-parallel execution of independent cases.
//!
//! Without the `parallel` feature every strategy runs sequentially.

/// How a batch of independent cases is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon's global pool, or the pool installed by the caller.
    #[default]
    Parallel,
}

impl Execution {
    /// Applies `f` to every item and returns the results in input order.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            _ => items.into_iter().map(f).collect(),
        }
    }

    /// Runs `f` with at most `jobs` worker threads. `jobs == 0` keeps the
    /// default pool.
    pub fn with_jobs<R, F>(jobs: usize, f: F) -> R
    where
        R: Send,
        F: FnOnce() -> R + Send,
    {
        #[cfg(feature = "parallel")]
        if jobs > 0 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                return pool.install(f);
            }
        }
        let _ = jobs;
        f()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_preserve_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Execution::Sequential.map(items.clone(), |x| x * x);
        let par = Execution::Parallel.map(items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 998001);
    }

    #[test]
    fn jobs_pool_runs_closure() {
        let v = Execution::with_jobs(2, || Execution::Parallel.map(vec![1, 2, 3], |x| x + 1));
        assert_eq!(v, vec![2, 3, 4]);
    }
}
