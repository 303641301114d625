//! Exact combinatorial and spectral graph toolkit at desk scale.
//!
//! Everything is built on bitset graphs of at most 64 vertices: named graph
//! families (cocktail-party blocks, Turán-type maximizers, CP-paths and
//! CP-cycles), exact NP-hard invariants (dissociation and d-independence
//! numbers, forbidden complete-multipartite containment), a deterministic
//! symmetric eigensolver with equitable-partition quotients, brute-force
//! Turán and minimizer searches, and closed-form bounds, all wired into a
//! verification registry replaying the underlying theorems on finite
//! instances.

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod solvers;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition, VertexSet, MAX_N};
