//! Exact integer polynomials, hyperbolicity, and explicit Anosov
//! automorphisms for standard rational forms.

mod catalog;
mod forge;
mod interval;
mod matrix;
mod pell;
mod poly;
mod sturm;

pub use catalog::{catalog_unit, validate_unit, UnitSpec};
pub use forge::{
    build_witness, build_witness_with_units, default_units, exponent_search, induced_matrix,
    is_automorphism, power_poly, seeded_units, verify_witness, AnosovWitness, BlockProof, ComponentAction,
    ExponentSearch, MAX_EXPONENT,
};
pub use interval::PosInterval;
pub use matrix::IntMatrix;
pub use pell::{is_squarefree, pell_fundamental_unit};
pub use poly::{big_to_json, IntPolynomial};
pub use sturm::{
    count_real_roots, count_roots_in, hyperbolicity, is_hyperbolic, is_integer_like,
    isolate_real_roots, refine_root, root_bound, sturm_chain, HyperbolicityProof,
};
