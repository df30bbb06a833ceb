//! Minimum hamiltonian-expandable graphs.
//!
//! A non-edge `xy` of a simple graph *extends* when adding it creates a
//! Hamiltonian cycle through `xy` — equivalently, when the graph already has
//! a Hamiltonian path from `x` to `y`. A graph is *expandable* when every
//! non-edge extends. The minimum number of edges of an expandable graph on
//! `n` vertices is 2, 4, 6 for `n = 3, 4, 5` and `⌈3n/2⌉` for `n ≥ 6`.
//!
//! The crate has three layers:
//!
//! * [`graph`] + [`oracle`] — a bitset graph type and exact Hamiltonian
//!   path/cycle decision procedures (subset DP for small orders, pruned
//!   backtracking above a configurable crossover), plus per-non-edge witness
//!   extraction and validation.
//! * [`constructions`] — extremal families realizing the minimum for every
//!   `n ≥ 3`, with closed-form cycle witnesses for each non-edge computed in
//!   linear time from the ladder structure, no search involved.
//! * [`filters`] + [`certify`] — structural pruning rules sound for graphs
//!   below the extremal edge count, exhaustive colex enumeration of edge
//!   sets, and end-to-end certification that no smaller expandable graph
//!   exists at a given order, emitting a machine-checkable certificate.

pub mod certify;
pub mod constructions;
pub mod filters;
pub mod graph;
pub mod oracle;

mod error;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, GraphJson, NonEdge};
pub use oracle::{CycleWitness, ExpandabilityReport};
