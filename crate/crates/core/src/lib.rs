//! Graphs as instruction strings.
//!
//! A small virtual machine with two pointers on a circular list of visited
//! nodes turns strings over the alphabet `N n P p V v C c W` into simple
//! graphs. The encoders go the other way: a greedy encoder from a chosen
//! start node, and an exhaustive search for the shortest, then
//! lexicographically smallest, string of a graph, which is identical for
//! isomorphic graphs. Levenshtein distance between such strings then serves
//! as a cheap stand-in for graph edit distance.

pub mod canonical;
pub mod cdll;
pub mod edgelist;
pub mod encoder;
pub mod error;
pub mod generators;
pub mod graph;
pub mod instruction;
pub mod metrics;
pub mod oracles;
pub mod rng;
pub mod vm;

pub use canonical::{
    canonical_string, canonical_string_with, enumerate_strings, enumerate_strings_with,
    is_canonical_equal, CanonicalOptions, CanonicalResult, SearchMode, DEFAULT_BUDGET,
};
pub use cdll::Cdll;
pub use edgelist::{parse_edgelist, serialize_edgelist};
pub use encoder::{
    graph_to_string_greedy, graph_to_string_greedy_min, graph_to_string_greedy_rnd, moves,
    pairs_in_order, sorted_pairs, valid_starts, DisplacementPair, EncodeResult, Pointer,
};
pub use error::{Error, Result};
pub use generators::{
    edit_neighbors_1ged, generate, string_neighbors_1lev, EditKind, EditNeighbor, Family, GraphSpec,
};
pub use graph::Graph;
pub use instruction::{cmp_symbol_order, parse, render, Instruction};
pub use metrics::{
    average_ranks, canonical_distance, levenshtein, ols_fit, ols_slope, spearman, LinearFit,
    Spearman,
};
pub use oracles::{ged_exact, is_isomorphic, is_isomorphism, DEFAULT_GED_CAP, DEFAULT_ISO_CAP};
pub use rng::{derive_seed, Prng};
pub use vm::{decode_with_trace, run, string_to_graph, InterpreterState};
