//! Search and certification of regular graphs whose vertices all have
//! pairwise distinct triangle-degrees ("K3-irregular" graphs).
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`] and [`k3`]: bit-row adjacency, triangle-degrees, complement,
//!   2-switches and incremental triangle-degree maintenance.
//! - [`io`]: adjacency-list text and graph6 readers/writers.
//! - [`bounds`]: closed-form bounds on triangle-degrees and orders of
//!   regular K3-irregular graphs, plus curated known results.
//! - [`verify`]: an independent brute-force oracle, isomorphism testing,
//!   structural audits and JSON certificates.
//! - [`evolve`]: the evolutionary search engine (regularity-preserving
//!   mutations, elitist selection with carryover).
//! - [`exec`]: data-parallel batch evaluation (rayon behind the `parallel`
//!   feature, sequential otherwise).

pub mod bounds;
pub mod error;
pub mod evolve;
pub mod exec;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod k3;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use k3::K3Profile;
