//! Spectral lower bounds on the chromatic number.
//!
//! Computes Hoffman's adjacency bound `1 + mu(A) / -mu_min(A)` and the
//! Laplacian bound `1 + mu(A) / (mu(L) - mu(A))`, checks them against exact
//! chromatic numbers, and verifies the underlying Hermitian eigenvalue
//! inequalities on random and exhaustive instances.

pub mod graph;
pub mod linalg;
pub mod bounds;
pub mod coloring;
pub mod harness;
pub mod cli;
