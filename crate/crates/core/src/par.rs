//! Thin data-parallel layer. With the `parallel` feature the helpers fan out
//! over rayon; without it they run the same closures sequentially. Every
//! helper preserves input order in its result, so both builds agree exactly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// First `Some` in input order.
pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() > 1 {
            return items.par_iter().find_map_first(f);
        }
    }
    items.iter().find_map(f)
}

/// Order-preserving map.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() > 1 {
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

/// `true` if any item satisfies `f`.
pub fn any<T, F>(items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() > 1 {
            return items.par_iter().any(f);
        }
    }
    items.iter().any(f)
}

/// Whether this build fans work out across threads.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
