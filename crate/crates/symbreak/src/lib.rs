//! Symmetry-breaking invariants of finite graphs.
//!
//! A vertex coloring is *distinguishing* when no automorphism other than
//! the identity preserves it. This crate computes the invariants built on
//! that idea:
//!
//! * the **distinguishing number**: the least number of colors admitting a
//!   distinguishing coloring;
//! * the **distinguishing threshold**: the least `k` such that *every*
//!   coloring with `k` colors is distinguishing, which equals one more than
//!   the largest cycle count over non-identity automorphisms;
//! * the **motion**: the least number of vertices moved by a non-identity
//!   automorphism;
//! * counts of distinguishing colorings with exactly or at most `k`
//!   colors, up to automorphism equivalence.
//!
//! Module map:
//!
//! * [`graph`] — undirected graphs on at most 62 vertices, graph6 and
//!   edge-list text codecs, disjoint unions;
//! * [`perm`] — permutations in image form, cycle structure, group closure;
//! * [`autsearch`] — automorphism group search via refinement and
//!   individualization, canonical forms, isomorphism tests;
//! * [`distinguishing`] — thresholds, distinguishing numbers, motion, and
//!   coloring counts, exact over big integers;
//! * [`families`] — parameterized families, Cayley graphs, generalized
//!   Johnson graphs with closed-form invariants, disjoint-union threshold
//!   rules, named fixtures;
//! * [`verify`] — suites re-checking the closed forms against direct
//!   computation;
//! * [`cli`] — the `symbreak` command-line interface.

pub mod autsearch;
pub mod cli;
pub mod distinguishing;
pub mod error;
pub mod families;
pub mod graph;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
