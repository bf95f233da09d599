use rayon::prelude::*;

/// Maps `f` over `shards` on `jobs` threads, keeping input order.
pub(crate) fn map_shards<S, T, F>(jobs: usize, shards: Vec<S>, f: F) -> Vec<T>
where
    S: Send,
    T: Send,
    F: Fn(S) -> T + Sync + Send,
{
    if jobs <= 1 || shards.len() <= 1 {
        return shards.into_iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| shards.into_par_iter().map(f).collect())
}
