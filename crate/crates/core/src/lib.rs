//! Exact computations on Lipschitz polytopes of finite posets.
//!
//! For a finite poset `P` with an adjoined minimum `⊥ = 0`, the Lipschitz
//! polytope `Lip(P)` is the set of functions `f` on `P` with `f(⊥) = 0`
//! and `0 ≤ f(b) − f(a) ≤ 1` across every cover relation `a ⋖ b` of `P̂`.
//! This crate provides
//!
//! * the poset model ([`poset`]) with filters, neighbor-closed filter chains,
//!   the cover quasi-metric and rank functions,
//! * permutations with descent and big-ascent statistics ([`perm`]),
//! * the alcove triangulation via descent-compatible permutations and the
//!   h*-statistic `stat_P` ([`triangulation`]),
//! * exact H/V-representations and structural checks ([`geometry`]),
//! * an independent lattice-point counting oracle ([`ehrhart`]),
//! * a theorem/conjecture suite over poset corpora ([`verify`]),
//! * the `liplab` command-line surface ([`cli`]).
//!
//! All arithmetic is exact.

pub mod cli;
pub mod ehrhart;
pub mod error;
pub mod fixtures;
pub mod geometry;
mod parallel;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod triangulation;
pub mod verify;

pub use error::Error;
pub use geometry::{HalfOpenPolytope, Row, VertexSet};
pub use perm::Permutation;
pub use poly::{GenPoly, RatPoly};
pub use poset::{Filter, FilterChain, Poset, Relabeling};
pub use triangulation::{Alcove, DescentVector};
