//! Exact degree-based graph invariants and mechanical verification of the
//! extremal claims attached to them.
//!
//! The harmonic index of a graph is the sum over edges of 2/(deg(u)+deg(v)).
//! This crate computes it (together with the Randic and first Zagreb
//! indices) in exact rational arithmetic, builds the graph families that
//! attain its extremes, and checks every bound, equality condition, and
//! transformation claim over explicit universes: all free trees up to a
//! given order (isomorph-free, via canonical level sequences), every
//! connected labeled graph at small orders, and seeded random connected
//! graphs beyond them.
//!
//! Verification is honest by construction: claims are stated as exact
//! comparisons, universes are reproducible (fixed seeds, deterministic
//! sweep order), and a failed claim reports the labeled counterexample it
//! was refuted on. One registered claim is in fact false, and the suite
//! finds its counterexample; see [`verify::ClaimId::LemEdgeRemoval`].

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod rational;
pub mod report;
pub mod verify;

pub use bounds::{
    all_bound_reports, bound_2m_over_n, bound_cauchy_schwarz, spider_second_max_value,
    tree_extremal_values, BoundId, BoundReport, BoundsError,
};
pub use canon::canonical_form;
pub use constructions::{
    attach_paths, complete_bipartite, path, remove_edge, spider, star, ConstructError,
    PathAttachment, SpiderSpec,
};
pub use enumerate::{
    all_connected_labeled_graphs, all_free_tree_sequences, all_free_trees, prufer_tree_oracle,
    random_connected_graph, EnumerateError, LevelSequence, Seed, SplitMix64, TreeCensus,
};
pub use graph::{Graph, GraphError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error, MAX_GRAPH6_N};
pub use invariants::{
    edge_weight, first_zagreb, harmonic_index, min_weight_edge, randic_index, EdgeWeight,
};
pub use rational::{cmp_rationals, Rational};
pub use report::{erratum_warnings, Warning};
pub use verify::{
    extremal_records, run_claim, run_claims, ClaimId, Counterexample, ExtremalRank,
    ExtremalRecord, VerificationResult, VerifyError, VerifyOptions, ALL_CLAIMS,
};
