//! Exact and closed-form measures of how close a graph is to being cordial.
//!
//! For a labelling `f: V -> {0, 1}` with edge labels `|f(x) - f(y)|`, let
//! `Δv` and `Δe` be the absolute differences between the numbers of 0- and
//! 1-labelled vertices and edges. The crate computes
//!
//! * `D1(G) = min_f (Δv + Δe)`, and
//! * `D2(G) = min { Δe : Δv <= 1 }`,
//!
//! exhaustively for graphs up to [`SOLVER_CAP`] vertices, and in closed form
//! (with explicit witness labellings) for trees, complete and complete
//! multipartite graphs, cycles, wheels and fans. A graph is cordial exactly
//! when `D2(G) <= 1`.

pub mod cli;
pub mod closed_forms;
pub mod engine;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod labelling;
pub mod naive;
pub mod tree;
pub mod witness;

pub use closed_forms::{
    closed_form, closed_form_complete, closed_form_cycle, closed_form_fan,
    closed_form_multipartite, closed_form_tree, closed_form_wheel, join_upper_bounds,
    join_upper_bounds_strict, ClosedForm, ClosedFormValue, JoinBounds,
};
pub use engine::{
    is_cordial, is_uniformly_cordial, solve_exact, ExactResult, SolveOptions, SweepState,
    SOLVER_CAP,
};
pub use error::{Error, Result};
pub use family::{generate, random_tree, FamilySpec};
pub use graph::Graph;
pub use labelling::{stats, Labelling, LabellingStats};
pub use naive::solve_naive;
pub use tree::tree_optimal_labelling;
pub use witness::{construct_witness, FamilyWitness};
