//! Weakly toll convexity on finite simple graphs.
//!
//! A walk between two nonadjacent vertices `u` and `v` is *weakly toll* when
//! `u` is adjacent to no interior vertex other than the first one and `v` is
//! adjacent to no interior vertex other than the last one; the first and last
//! interior vertices may repeat. The vertices lying on such walks form the
//! weakly toll interval of the pair, and the sets closed under that operator
//! form a graph convexity. This crate computes the four interval operators
//! (geodesic, monophonic, toll, weakly toll), convex hulls, extreme vertices,
//! and the associated minimum-set invariants, together with interval-graph
//! machinery (perfect elimination orders, clique paths, end vertices) and
//! independent brute-force oracles used to cross-check everything.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `wtoll` crate carries file formats and the command-line frontend.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bitset;
pub mod convexity;
pub mod generate;
pub mod graph;
pub mod invariants;
pub mod model;
pub mod oracle;
pub mod recognition;
pub mod walks;

pub use bitset::VertexSet;
pub use convexity::ConvexityKind;
pub use graph::{Graph, GraphBuilder, GraphError, VertexId};
pub use model::IntervalModel;
pub use walks::{WalkKind, WalkWitness};
