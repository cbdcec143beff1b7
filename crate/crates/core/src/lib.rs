//! Rainbow cycles in edge-colored graphs.
//!
//! A simple graph on `n` vertices whose edges are colored with `n` colors,
//! every color class of size at least `301*k*log2(k)`, contains a rainbow
//! cycle of length at most `ceil(n/k)`. This crate makes that guarantee
//! executable: a certified search pipeline that returns a verified cycle
//! witness, exact girth and rainbow-cycle oracles to check it against,
//! numeric verifiers for the inequalities the guarantee rests on, and
//! seeded instance generators, all behind a `rainbow` CLI.

pub mod bounds;
pub mod digraph;
pub mod gen;
pub mod girth;
pub mod graph;
pub mod io;
pub mod params;
pub mod pipeline;
pub mod rainbow;
pub mod witness;

pub use digraph::{min_out_degree, Digraph};
pub use girth::{
    bound_sparse_girth, bound_directed_girth, shortest_cycle_undirected, shortest_directed_cycle,
    SimpleGraphView,
};
pub use graph::{validate, ColoredGraph, ValidationReport};
pub use io::{read_colored_graph, write_colored_graph};
pub use params::PipelineParams;
pub use pipeline::{find_short_rainbow_cycle, DriverOutcome, PipelineError};
pub use rainbow::{half_bound_rainbow_cycle, shortest_rainbow_cycle_exact};
pub use witness::{read_witness, write_witness, CycleWitness, HostKind};
