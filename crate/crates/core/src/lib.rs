//! Strong odd colorings of graphs.
//!
//! A strong odd coloring is a proper coloring in which every color that
//! appears in an open neighbourhood appears there an odd number of times.
//! This crate holds the verifiers, an exact solver for the chain
//! χ ≤ χ_o ≤ χ_so ≤ χ(G²), the polynomial constructions for trees, cycles,
//! unicyclic graphs and products, and plane combinatorial maps with the
//! facial-coloring decomposition pipeline.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod coloring;
pub mod constructive;
pub mod error;
pub mod gallery;
pub mod graph;
pub mod plane;
pub mod product;
pub mod solver;

pub use coloring::{Coloring, Report, Violation, ViolationKind};
pub use error::{ColoringError, ConstructError, GraphError, MapError, SolveError};
pub use graph::Graph;
pub use product::{product, ProductKind};
pub use solver::{Budget, Decision, Param, SolveResult, Solver};
