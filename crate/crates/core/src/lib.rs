//! Exact analysis of maximal induced forests in small simple graphs.
//!
//! The crate decides whether a graph is *well-f-covered* (every maximal
//! induced forest has the same order), computes forest numbers exactly,
//! provides graph constructions with predicted forest numbers, and ships a
//! harness that checks structural claims about these graphs by exhaustive and
//! seeded random search.

pub mod graph;
pub mod forest;
pub mod independence;
pub mod constructions;
pub mod reductions;
pub mod harness;
pub mod cli;
mod search;

pub use forest::{
    brute_force_maximal_forests, decide_well_f_covered, enumerate_maximal_forests,
    every_maximal_forest_contains, forest_number, is_well_f_covered, min_maximal_forest_order,
    EnumerationBudget, ForestVerdict,
};
pub use graph::{Edge, Graph, GraphError, VertexSet};
pub use independence::{enumerate_maximal_independent_sets, independence_verdict, IndependenceVerdict};
pub use reductions::{decide_well_f_covered_reduced, reduce, ReductionStep, ReductionTrace};
