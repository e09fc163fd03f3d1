//! Data-parallel helpers. With the `parallel` feature, [`Execution::Parallel`] fans out
//! over rayon's pool; without it, every mode runs sequentially. Output order never
//! depends on the mode.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
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

impl Execution {
    /// `true` if this mode will actually use more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps `f` over `0..len`, preserving order.
    pub fn map_range<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }

    /// Fallible [`Execution::map`]; returns the first error in input order.
    pub fn try_map<T, R, E, F>(self, items: &[T], f: F) -> Result<Vec<R>, E>
    where
        T: Sync,
        R: Send,
        E: Send,
        F: Fn(&T) -> Result<R, E> + Sync + Send,
    {
        self.map(items, f).into_iter().collect()
    }

    /// `true` if `pred` holds for every index in `0..len`.
    pub fn all<F>(self, len: usize, pred: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return (0..len).into_par_iter().all(pred);
        }
        (0..len).all(pred)
    }
}

/// Settings shared by the graph, transform and check entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub engine: crate::amplitude::AmplitudeEngine,
    pub execution: Execution,
    /// Largest `d^n` for which full-matrix operations are allowed.
    pub size_bound: usize,
}

pub const DEFAULT_SIZE_BOUND: usize = 4096;

impl Default for Config {
    fn default() -> Self {
        Self { engine: Default::default(), execution: Default::default(), size_bound: DEFAULT_SIZE_BOUND }
    }
}

impl Config {
    pub fn with_engine(mut self, engine: crate::amplitude::AmplitudeEngine) -> Self {
        self.engine = engine;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_size_bound(mut self, size_bound: usize) -> Self {
        self.size_bound = size_bound;
        self
    }
}
