//! Exact counting of graph homomorphisms into trees.
//!
//! The library provides:
//!
//! - [`graph`]: an immutable simple undirected graph with the structural
//!   queries everything else relies on (components, bipartitions,
//!   diameter, isomorphism search, independent-set census);
//! - [`trees`]: enumeration of all non-isomorphic free trees of a given
//!   order, star/bistar constructors, and classification of trees of
//!   diameter at most three;
//! - [`hom`]: exact homomorphism and surjective-homomorphism counters,
//!   both by backtracking search and by closed formulas for star and
//!   bistar targets, plus a decomposition counter for low-diameter
//!   sources;
//! - [`equiv`]: the equivalence relations induced by comparing
//!   homomorphism counts into trees of bounded diameter, and a subset-sum
//!   collision search;
//! - [`perm`]: permutations in cycle notation, cycle types, conjugacy;
//! - [`constructions`]: the graph families whose homomorphism profiles
//!   the verification suites check, including a pair of non-isomorphic
//!   bipartite graphs with identical counts into every tree of bounded
//!   order;
//! - [`io`]: a line-oriented edge-list file format;
//! - [`verify`]: reproducible pass/fail suites tying the counters, the
//!   constructions, and the closed formulas together.
//!
//! All counts are exact arbitrary-precision naturals; no floating point
//! is used anywhere.

pub mod constructions;
pub mod equiv;
pub mod graph;
pub mod hom;
pub mod io;
pub mod perm;
pub mod trees;
pub mod verify;

pub use graph::{Bipartition, Graph, GraphError, SizeParameter};
pub use hom::HomCount;
pub use trees::{Tree, TreeShape};
