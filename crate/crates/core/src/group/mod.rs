//! Automorphisms of the weighted quotient graph, their subgroups up to
//! conjugacy, and Galois data `(H, tau)`.

mod datum;
#[allow(clippy::module_inception)]
mod group;
mod perm;

pub use datum::{are_equivalent, galois_data, is_automorphism, GaloisDatum};
pub use group::{automorphisms, normalizer, subgroup_classes, PermGroup};
pub use perm::Permutation;
