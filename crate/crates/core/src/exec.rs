//! Data-parallel batch evaluation.
//!
//! With the `parallel` feature (default) an [`Executor`] can run index-mapped
//! work on rayon; without it every executor runs sequentially. Results are
//! always returned in index order, so the choice of executor never changes
//! what is computed.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::k3::{k3_profile, K3Profile};

enum Kind {
    Sequential,
    #[cfg(feature = "parallel")]
    Global,
    #[cfg(feature = "parallel")]
    Pool(rayon::ThreadPool),
}

pub struct Executor {
    kind: Kind,
}

impl std::fmt::Debug for Executor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match &self.kind {
            Kind::Sequential => "sequential".to_string(),
            #[cfg(feature = "parallel")]
            Kind::Global => "parallel(global)".to_string(),
            #[cfg(feature = "parallel")]
            Kind::Pool(p) => format!("parallel({})", p.current_num_threads()),
        };
        f.write_str(&name)
    }
}

impl Executor {
    pub fn sequential() -> Self {
        Executor {
            kind: Kind::Sequential,
        }
    }

    /// A rayon executor with `threads` workers, or the global pool for
    /// `None`. Falls back to sequential when built without `parallel`.
    pub fn parallel(threads: Option<usize>) -> Result<Self> {
        #[cfg(feature = "parallel")]
        {
            match threads {
                None => Ok(Executor { kind: Kind::Global }),
                Some(0) => Err(Error::Config("thread count must be positive".into())),
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map(|p| Executor {
                        kind: Kind::Pool(p),
                    })
                    .map_err(|e| Error::Internal(format!("thread pool: {e}"))),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            if threads == Some(0) {
                return Err(Error::Config("thread count must be positive".into()));
            }
            Ok(Executor::sequential())
        }
    }

    pub fn is_parallel(&self) -> bool {
        !matches!(self.kind, Kind::Sequential)
    }

    /// `(0..len).map(f)` collected in index order.
    pub fn map<T, F>(&self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match &self.kind {
            Kind::Sequential => (0..len).map(f).collect(),
            #[cfg(feature = "parallel")]
            Kind::Global => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            #[cfg(feature = "parallel")]
            Kind::Pool(pool) => {
                use rayon::prelude::*;
                pool.install(|| (0..len).into_par_iter().map(f).collect())
            }
        }
    }
}

impl Default for Executor {
    fn default() -> Self {
        Executor::parallel(None).unwrap_or_else(|_| Executor::sequential())
    }
}

/// Triangle-degree profiles of a batch of graphs.
pub fn evaluate_profiles(graphs: &[Graph], exec: &Executor) -> Vec<K3Profile> {
    exec.map(graphs.len(), |i| k3_profile(&graphs[i]))
}
