//! Exact decision procedure for Anosov rational forms of the nilpotent Lie
//! algebras `n_{G,c}` associated to a finite simple graph `G`, together with
//! explicit hyperbolic integer-like automorphisms for standard forms.
//!
//! Layout:
//! - [`graph`]: graphs, coherent components, quotient graphs.
//! - [`group`]: automorphisms of the quotient graph and Galois data.
//! - [`lyndon`]: trace monoid normal forms, Lyndon bases, structure constants.
//! - [`decider`]: the decision rule, its special cases and a brute-force oracle.
//! - [`witness`]: integer polynomials, unit catalog, explicit automorphisms.

pub mod caps;
pub mod decider;
pub mod error;
pub mod graph;
pub mod group;
pub mod lyndon;
pub mod witness;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{Graph, QuotientGraph, VertexSet};
