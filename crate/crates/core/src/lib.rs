//! Spectral tools for graphs with dominating induced matchings (DIMs).
//!
//! A DIM of a graph is a matching `M` such that every other edge shares an
//! end-vertex with exactly one edge of `M`. The crate provides
//!
//! * graph construction, matrices and an edge-list format ([`graph`], [`matrix`], [`io`]);
//! * a dense symmetric eigensolver and spectrum grouping ([`eigen`]);
//! * closed-form spectra of complete-DIM graphs `K_{M,S}` ([`closed_form`]);
//! * DIM predicates and `K_{M,S}` recognition ([`recognition`]);
//! * eigenvalue bounds on DIM size ([`bounds`]);
//! * a brute-force oracle and a soundness sweep ([`oracle`], [`sweep`]);
//! * the `dimspec` command-line front end ([`cli`]).

pub mod bounds;
pub mod cli;
pub mod closed_form;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod recognition;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{generate_cdim, join, Edge, Graph};
pub use matrix::{matrix, MatrixKind, SymMatrix};
