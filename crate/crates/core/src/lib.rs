//! The k-forcing process on small graphs.
//!
//! Starting from an initially coloured vertex set, a coloured vertex with at
//! most `k` non-coloured neighbours colours all of them. A set that
//! eventually colours the whole graph is a k-forcing set; the smallest size
//! of one is the k-forcing number `F_k(G)`, and `Z(G) = F_1(G)` is the zero
//! forcing number.
//!
//! This crate provides:
//!
//! * graph construction, graph6 and edge-list I/O, and isomorph-free
//!   enumeration of small connected graphs ([`graph`], [`graph6`],
//!   [`edge_list`], [`families`], [`enumerate`]);
//! * the forcing process itself ([`forcing`]);
//! * exact and heuristic forcing numbers ([`solver`]);
//! * degree-based upper bounds and the extremal families that meet them
//!   ([`bounds`]);
//! * exhaustive verification drivers producing per-graph records
//!   ([`verifier`]).
//!
//! Computing `Z(G)` is NP-hard in general, so everything here targets small
//! orders: vertex sets are packed into a single `u64`.

pub mod bounds;
pub mod edge_list;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod graph6;
pub mod solver;
pub mod verifier;
pub mod vertex_set;

pub use bounds::{
    amos_bound, bound_report, caro_pepper_bound, check_amos_equality, classify_extremal,
    BoundReport, ExtremalClass, ExtremalTag, Fraction,
};
pub use edge_list::{encode_edge_list, parse_edge_list};
pub use enumerate::{are_isomorphic, canonical_code, enumerate_connected};
pub use error::{BoundError, GraphError};
pub use families::Family;
pub use forcing::{
    closure, is_forcing_set, stalled_frontier, trace, ColorState, ForcingTrace, Frontier,
};
pub use graph::{DegreeStats, Graph, Vertex};
pub use graph6::{encode_graph6, parse_graph6};
pub use solver::{
    brute_force_oracle, greedy_upper_bound, solve, solve_connected_complement, Method, SolveError,
    SolveResult, SolverConfig,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};
