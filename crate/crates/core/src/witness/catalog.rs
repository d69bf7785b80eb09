//! Fixed catalog of algebraic units in totally real quadratic and cubic
//! fields.

use super::pell::{is_squarefree, pell_fundamental_unit};
use super::poly::IntPolynomial;
use super::sturm::count_real_roots;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSpec {
    pub degree: usize,
    /// Monic, irreducible, constant term ±1.
    pub min_poly: IntPolynomial,
    /// Real embeddings.
    pub real_embeddings: usize,
    /// Pairs of complex embeddings.
    pub complex_pairs: usize,
    pub label: String,
}

impl UnitSpec {
    fn new(min_poly: IntPolynomial, label: String) -> UnitSpec {
        let degree = min_poly.degree().expect("nonzero");
        let real = count_real_roots(&min_poly);
        UnitSpec {
            degree,
            min_poly,
            real_embeddings: real,
            complex_pairs: (degree - real) / 2,
            label,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "min_poly": self.min_poly.to_json(),
            "min_poly_text": self.min_poly.to_string(),
            "signature": [self.real_embeddings, self.complex_pairs],
            "label": self.label,
        })
    }
}

/// Totally real cubic units `(ascending coefficients, field discriminant)`,
/// cyclic fields first.
const CUBICS: [([i64; 4], u64); 5] = [
    ([1, -2, -1, 1], 49),
    ([1, -3, 0, 1], 81),
    ([-1, -4, -1, 1], 169),
    ([1, -3, -1, 1], 148),
    ([-1, -4, 0, 1], 229),
];

/// The `seed`-th squarefree integer `d >= 2`.
fn nth_squarefree(seed: usize) -> u64 {
    (2u64..).filter(|&d| is_squarefree(d)).nth(seed).unwrap()
}

/// Unit of a real quadratic field (`degree = 2`) or a totally real cubic
/// field (`degree = 3`). Quadratic seeds enumerate the squarefree `d >= 2`;
/// cubic seeds cycle through a fixed list.
pub fn catalog_unit(degree: usize, seed: usize) -> Result<UnitSpec> {
    match degree {
        2 => {
            let d = nth_squarefree(seed);
            let (x, y) = pell_fundamental_unit(d)?;
            let norm = &x * &x - BigInt::from(d) * &y * &y;
            let poly = IntPolynomial::new(vec![norm, -(BigInt::from(2) * &x), BigInt::one()]);
            Ok(UnitSpec::new(poly, format!("{x} + {y}*sqrt({d})")))
        }
        3 => {
            let (coeffs, disc) = CUBICS[seed % CUBICS.len()];
            Ok(UnitSpec::new(
                IntPolynomial::from_i64s(&coeffs),
                format!("totally real cubic, discriminant {disc}"),
            ))
        }
        other => Err(Error::UnsupportedDegree(other)),
    }
}

/// Checks the catalog invariants: monic, constant term ±1, no rational root
/// (which suffices for irreducibility in degree at most three), all roots
/// real.
pub fn validate_unit(u: &UnitSpec) -> bool {
    let p = &u.min_poly;
    let monic_unit = p.is_monic() && p.coeff(0).abs().is_one();
    // A rational root of a monic integer polynomial with constant ±1 is ±1.
    let no_rational_root = [1i64, -1]
        .iter()
        .all(|&r| !p.eval(&BigInt::from(r)).is_zero());
    monic_unit && no_rational_root && u.degree <= 3 && u.real_embeddings == u.degree
}
