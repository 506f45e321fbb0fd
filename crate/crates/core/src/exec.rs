//! Sequential and data-parallel execution helpers.
//!
//! With the `parallel` feature disabled every helper runs sequentially, whatever
//! mode is requested, so callers never need their own `cfg` switches.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExecMode {
    #[default]
    Sequential,
    Parallel,
}

impl ExecMode {
    /// `Parallel` when the crate was built with rayon, otherwise `Sequential`.
    pub fn best_available() -> ExecMode {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}

/// Runs both closures, concurrently in parallel mode.
pub fn join<A, B, RA, RB>(mode: ExecMode, a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return rayon::join(a, b);
    }
    let _ = mode;
    (a(), b())
}

/// First `Some` in item order. The parallel version may evaluate later items
/// speculatively but returns the same answer.
pub fn find_map_first<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().find_map_first(f);
    }
    let _ = mode;
    items.iter().find_map(f)
}

/// `f` over every item, results in item order.
pub fn map_collect<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u32> = (0..1000).collect();
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            assert_eq!(
                find_map_first(mode, &items, |&x| (x % 97 == 96).then_some(x)),
                Some(96)
            );
            assert_eq!(map_collect(mode, &items, |&x| x * 2)[999], 1998);
            assert_eq!(join(mode, || 1, || 2), (1, 2));
        }
    }
}
