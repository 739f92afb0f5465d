//! Packing edge-colorings of subcubic multigraphs.
//!
//! A `(1^l, 2^k)`-packing edge-coloring partitions the edges of a graph into
//! `l` matchings and `k` induced matchings. This crate provides:
//!
//! - [`graph`]: loopless multigraphs with line-graph distances, girth,
//!   threads, and components;
//! - [`density`]: exact maximum average degree (`mad`) via max-flow
//!   feasibility bisection, in rational arithmetic;
//! - [`coloring`]: packing specs, colorings, and validators, including the
//!   strengthened "good coloring" conditions;
//! - [`solver`]: an exhaustive backtracking decider with certificates;
//! - [`irregular`]: a constructive colorer producing `(1^2, 2^2)` colorings
//!   of 3-irregular subcubic multigraphs by matching-pair local search;
//! - [`sparse`]: a constructive good colorer for subcubic graphs with
//!   `mad < 20/9`, plus a mechanical discharging auditor;
//! - [`families`]: generators for the counterexample graphs `G1`, `G2(k)`,
//!   `G3` and supporting corpora;
//! - [`io`]: the text formats for graphs and coloring certificates;
//! - [`cli`]: the `pack-edge` command implementations.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --release --example stats_families        # structural queries
//! cargo run --release --example exact_density         # exact mad computations
//! cargo run --release --example refute_counterexamples # G1 / G2(k) refutations
//! cargo run --release --example refute_girth5         # G3 refutation (minutes)
//! cargo run --release --example color_irregular       # constructive theorem-1 colorings
//! cargo run --release --example color_sparse          # constructive sparse good colorings
//! cargo run --release --example discharging_audit     # exact charge ledgers
//! cargo run --release --example enumerate_small       # small-graph census
//! cargo run --release --example certificates          # writing and checking certificates
//! ```
//!
//! The `pack-edge` binary exposes the same operations as subcommands
//! (`solve`, `color-t1`, `color-t2`, `audit`, `gen`, `check`, `stats`,
//! `suite`); see the README for the exit-code contract.

pub mod coloring;
pub mod density;
pub mod graph;
pub mod solver;

pub use coloring::{validate, validate_good, vertex_sees, EdgeColoring, PackingSpec, Violation};
pub use density::mad_exact;
pub use graph::{EdgeId, GraphError, MultiGraph, VertexId};
pub use solver::{decide, decide_good, SolveResult, SolverConfig, Verdict};
