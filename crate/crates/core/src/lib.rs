//! Toughness, isolated toughness, vertex connectivity and component factors
//! of small simple graphs, with exact rational arithmetic throughout.
//!
//! The library decides whether graphs admit `{K2, cycle}`- and
//! `{K2, odd cycle >= 5}`-factors, checks the `(F, n)`-factor critical
//! avoidable property, builds the extremal join families used as tightness
//! examples for the isolated-toughness and toughness conditions, and runs
//! reproducible verification campaigns over enumerated or sampled graphs.
//!
//! ```
//! use ftk::graph::{complete_graph, disjoint_union, empty_graph, join};
//! use ftk::invariants::isolated_toughness;
//! use ftk::Rat;
//!
//! let side = disjoint_union(&[empty_graph(2), complete_graph(2)]);
//! let g = join(&complete_graph(4), &side);
//! assert_eq!(isolated_toughness(&g).unwrap().value, Rat::new(5, 3).unwrap());
//! ```

#![forbid(unsafe_code)]

pub mod blocks;
pub mod cli;
pub mod connectivity;
pub mod criticality;
pub mod error;
pub mod factors;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod invariants;
mod kernel;
pub mod matching;
pub mod rational;

pub use error::{Error, Result};
pub use factors::FactorKind;
pub use graph::{Edge, Graph, VertexSet};
pub use kernel::{DEFAULT_EXHAUSTIVE_CAP, MASK_LIMIT};
pub use rational::Rat;

/// Version tag of every JSON document the crate emits.
pub const SCHEMA_VERSION: u32 = 1;
