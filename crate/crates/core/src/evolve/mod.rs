//! Evolutionary search for regular graphs with distinct triangle-degrees.
//!
//! A population of `N` regular graphs is seeded from randomized ring
//! lattices. Each generation every individual spawns `m` offspring through
//! regularity-preserving mutations; the next population is the best `N` of
//! the offspring plus a carried-over elite of parents. Fitness is
//! `100 / (P + 1)` where `P` counts vertex pairs sharing a triangle-degree.
//!
//! Every offspring draws from its own RNG stream, so results do not depend
//! on the executor or thread count.

mod checkpoint;
mod config;
mod individual;
mod mutation;
pub mod rng;
mod search;
mod select;

pub use checkpoint::Checkpoint;
pub use config::{carryover_count, MutationKind, OrderRange, SearchConfig};
pub use individual::{fitness, Fitness, Individual, IndividualSummary};
pub use mutation::{
    init_ring_lattice, mutate_add_pair_odd, mutate_add_vertex_even, mutate_edge_switch,
    mutate_remove_pair_odd, mutate_remove_vertex_even, randomize, MutationError, Mutator,
    DEFAULT_RETRY_BUDGET,
};
pub use search::{search, search_with, Outcome, Progress, SearchReport, SearchResult, TraceEntry};
pub use select::{rank, select};
