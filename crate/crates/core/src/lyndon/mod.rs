//! Lyndon elements of the trace monoid of a graph and the induced basis of
//! the free `c`-step nilpotent partially commutative Lie algebra.
//!
//! Letters are vertex indices ordered by declaration. The greatest word of a
//! commutation class represents it; a class is a Lyndon element when that
//! word is a Lyndon word (least among its rotations).

mod basis;
mod structure;
mod trace;
mod weights;

pub use basis::{dimension, enumerate_lyndon, BracketTree, LyndonBasis, LyndonElement, WeightVector};
pub use structure::{
    commutator, coordinates, expansions, structure_constants, StructureTable, TraceCombination,
};
pub use trace::{
    is_lyndon_element, is_lyndon_word, is_normal_form, trace_normal_form, weight_of,
    word_from_names, word_to_names, Trace, Word,
};
pub use weights::{connected_vertex_sets, connected_weights, diagonal_eigenvalue_exponents, weight_set};
