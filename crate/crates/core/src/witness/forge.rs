//! Explicit Anosov automorphisms of standard rational forms.
//!
//! Each coherent component of size `k ∈ {2, 3}` gets a unit `ξ` of a
//! totally real field of degree `k` and an exponent `N`. The vertices of the
//! component are acted on by the companion matrix of the minimal polynomial
//! of `ξ^N`; the action extends to the whole algebra through the bracket
//! table. Eigenvalues are products of conjugates of the `ξ^N` over weights
//! with connected support, so exponents are chosen to keep every such
//! product off the unit circle. Everything returned is re-proved exactly.

use super::catalog::{catalog_unit, UnitSpec};
use super::interval::PosInterval;
use super::matrix::IntMatrix;
use super::poly::IntPolynomial;
use super::sturm::{hyperbolicity, isolate_real_roots, is_integer_like, refine_root, HyperbolicityProof};
use crate::caps::Caps;
use crate::decider::decide_standard;
use crate::error::{Error, Result};
use crate::graph::{Graph, QuotientGraph};
use crate::lyndon::{connected_weights, enumerate_lyndon, structure_constants, LyndonBasis, StructureTable, WeightVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};

/// Largest exponent tried per component.
pub const MAX_EXPONENT: u32 = 64;
/// Candidates examined before the search gives up.
const SEARCH_BUDGET: usize = 200_000;
const START_PRECISION: u64 = 256;
const MAX_PRECISION: u64 = 2048;

/// Characteristic polynomial of `ξ^n` where `ξ` runs over the roots of the
/// monic `f`, from power sums and Newton's identities.
pub fn power_poly(f: &IntPolynomial, n: u32) -> IntPolynomial {
    assert!(f.is_monic() && n >= 1);
    let k = f.degree().unwrap();
    let c = |i: usize| f.coeff(i);
    // p[m] = Σ r^m for m = 0..=k·n.
    let top = k * n as usize;
    let mut p: Vec<BigInt> = Vec::with_capacity(top + 1);
    p.push(BigInt::from(k));
    for m in 1..=top {
        let mut s = BigInt::zero();
        for i in 1..=m.min(k) {
            let coef = c(k - i);
            if i == m {
                s += coef * BigInt::from(m);
            } else {
                s += coef * &p[m - i];
            }
        }
        p.push(-s);
    }
    let q = |m: usize| &p[m * n as usize];
    // d[i] is the coefficient of X^(k-i), d[0] = 1.
    let mut d: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=k {
        let mut s = q(m).clone();
        for (i, di) in d.iter().enumerate().skip(1) {
            s += di * q(m - i);
        }
        let (quot, rem) = (-s).div_rem(&BigInt::from(m));
        debug_assert!(rem.is_zero());
        d.push(quot);
    }
    d.reverse();
    IntPolynomial::new(d)
}

/// Unit and exponent chosen for one coherent component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAction {
    pub component: usize,
    pub vertices: Vec<usize>,
    pub unit: UnitSpec,
    pub exponent: u32,
    /// Characteristic polynomial of `ξ^N`; its companion acts on the
    /// component's vertices.
    pub block_poly: IntPolynomial,
}

/// Hyperbolicity proof for one diagonal block of the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProof {
    pub indices: Vec<usize>,
    pub char_poly: IntPolynomial,
    pub proof: HyperbolicityProof,
}

#[derive(Clone, Debug)]
pub struct AnosovWitness {
    pub c: usize,
    pub actions: Vec<ComponentAction>,
    /// Columns are images of basis elements.
    pub matrix: IntMatrix,
    pub char_poly: IntPolynomial,
    pub blocks: Vec<BlockProof>,
    pub automorphism: bool,
    pub integer_like: bool,
    pub hyperbolic: bool,
    pub candidates_tried: usize,
}

impl AnosovWitness {
    pub fn exponents(&self) -> Vec<u32> {
        self.actions.iter().map(|a| a.exponent).collect()
    }

    pub fn to_json(&self, g: &Graph, basis: &LyndonBasis) -> Value {
        let units: Vec<Value> = self
            .actions
            .iter()
            .map(|a| {
                json!({
                    "component": a.component,
                    "vertices": a.vertices.iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
                    "unit": a.unit.to_json(),
                    "exponent": a.exponent,
                    "block_poly": a.block_poly.to_json(),
                })
            })
            .collect();
        let blocks: Vec<Value> = self
            .blocks
            .iter()
            .map(|b| {
                json!({
                    "indices": b.indices,
                    "char_poly": b.char_poly.to_json(),
                    "hyperbolic": b.proof.hyperbolic,
                    "root_at_one": b.proof.root_at_one,
                    "root_at_minus_one": b.proof.root_at_minus_one,
                    "reciprocal_part_degree": b.proof.reciprocal_part.degree().unwrap_or(0),
                    "sturm_count": b.proof.sturm_count,
                })
            })
            .collect();
        let words: Vec<String> = basis
            .elements
            .iter()
            .map(|e| e.word.iter().map(|&v| g.name(v as usize)).collect::<Vec<_>>().join(" "))
            .collect();
        json!({
            "c": self.c,
            "dimension": self.matrix.size(),
            "basis": words,
            "units": units,
            "exponents": self.exponents(),
            "matrix": self.matrix.to_json(),
            "char_poly": self.char_poly.to_json(),
            "char_poly_text": self.char_poly.to_string(),
            "blocks": blocks,
            "proof": {
                "automorphism": self.automorphism,
                "integer_like": self.integer_like,
                "hyperbolic": self.hyperbolic,
            },
            "candidates_tried": self.candidates_tried,
        })
    }
}

/// Component vertex lists and unit checks shared by the search and the
/// matrix construction.
fn check_assignment(g: &Graph, c: usize, units: &[UnitSpec]) -> Result<Vec<Vec<usize>>> {
    let verdict = decide_standard(g, c)?;
    if !verdict.anosov {
        let detail = verdict
            .witness
            .map(|w| format!("components {:?} sum to {}", w.components.to_vec(), w.sum))
            .unwrap_or_default();
        return Err(Error::NotAnosov(format!("standard form in class {c}: {detail}")));
    }
    let q = QuotientGraph::of(g);
    if units.len() != q.node_count() {
        return Err(Error::AssignmentMismatch(format!(
            "{} units for {} components",
            units.len(),
            q.node_count()
        )));
    }
    (0..q.node_count())
        .map(|j| {
            let w = q.weight(j);
            if !(2..=3).contains(&w) {
                return Err(Error::UnsupportedDegree(w));
            }
            if units[j].degree != w {
                return Err(Error::AssignmentMismatch(format!(
                    "component {j} has {w} vertices but its unit has degree {}",
                    units[j].degree
                )));
            }
            Ok(q.members(j).to_vec())
        })
        .collect()
}

/// Lexicographic search over exponent tuples in `[1, 64]^l`, yielding the
/// tuples for which interval arithmetic proves that no weight with
/// connected support gives an eigenvalue of modulus one.
pub struct ExponentSearch {
    components: Vec<Vec<usize>>,
    weights: Vec<WeightVector>,
    roots: Vec<Vec<(BigRational, BigRational)>>,
    polys: Vec<IntPolynomial>,
    magnitudes: HashMap<u64, Vec<Vec<PosInterval>>>,
    current: Option<Vec<u32>>,
    pub tried: usize,
}

pub fn exponent_search(g: &Graph, c: usize, units: &[UnitSpec]) -> Result<ExponentSearch> {
    let components = check_assignment(g, c, units)?;
    let polys: Vec<IntPolynomial> = units.iter().map(|u| u.min_poly.clone()).collect();
    let roots = polys
        .iter()
        .map(|p| {
            let r = isolate_real_roots(p);
            if r.len() != p.degree().unwrap() {
                return Err(Error::InvalidInput(format!("{p} is not totally real")));
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExponentSearch {
        weights: connected_weights(g, c).into_iter().collect(),
        current: Some(vec![1; components.len()]),
        components,
        roots,
        polys,
        magnitudes: HashMap::new(),
        tried: 0,
    })
}

impl ExponentSearch {
    fn magnitudes(&mut self, prec: u64) -> &Vec<Vec<PosInterval>> {
        let (polys, roots) = (&self.polys, &self.roots);
        self.magnitudes.entry(prec).or_insert_with(|| {
            polys
                .iter()
                .zip(roots)
                .map(|(p, rs)| {
                    rs.iter()
                        .map(|(lo, hi)| {
                            let mut bits = prec as u32 + 16;
                            loop {
                                let (a, b) = refine_root(p, lo.clone(), hi.clone(), bits);
                                if let Some(m) = PosInterval::magnitude_of(&a, &b, prec) {
                                    return m;
                                }
                                bits *= 2;
                            }
                        })
                        .collect()
                })
                .collect()
        })
    }

    /// `Some(true)` if every weight is proved off the unit circle,
    /// `Some(false)` if some product could not be separated from 1.
    fn separated(&mut self, n: &[u32]) -> bool {
        let mut pending: Vec<usize> = (0..self.weights.len()).collect();
        let mut prec = START_PRECISION;
        while prec <= MAX_PRECISION {
            let mags = self.magnitudes(prec).clone();
            pending.retain(|&w| {
                let e = &self.weights[w];
                let mut prod = PosInterval::one();
                for (j, verts) in self.components.iter().enumerate() {
                    for (i, &v) in verts.iter().enumerate() {
                        let k = e.0[v] as u64 * n[j] as u64;
                        if k > 0 {
                            prod = prod.mul(&mags[j][i].pow(k, prec), prec);
                        }
                    }
                }
                prod.compare_one().is_none()
            });
            if pending.is_empty() {
                return true;
            }
            prec *= 2;
        }
        false
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        for slot in cur.iter_mut().rev() {
            if *slot < MAX_EXPONENT {
                *slot += 1;
                return;
            }
            *slot = 1;
        }
        self.current = None;
    }
}

impl Iterator for ExponentSearch {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        while let Some(n) = self.current.clone() {
            if self.tried >= SEARCH_BUDGET {
                return None;
            }
            self.tried += 1;
            self.advance();
            if self.separated(&n) {
                return Some(n);
            }
        }
        None
    }
}

type Sparse = BTreeMap<usize, BigInt>;

fn bracket_sparse(table: &StructureTable, x: &Sparse, y: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (&i, a) in x {
        for (&j, b) in y {
            for &(k, coef) in table.bracket(i, j) {
                *out.entry(k).or_default() += a * b * BigInt::from(coef);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn column(m: &IntMatrix, j: usize) -> Sparse {
    (0..m.size())
        .filter_map(|i| {
            let x = m.get(i, j);
            (!x.is_zero()).then(|| (i, x.clone()))
        })
        .collect()
}

/// Matrix of the automorphism determined by companion blocks on the
/// vertices. Column `i` is the image of basis element `i`.
fn matrix_from_blocks(
    basis: &LyndonBasis,
    table: &StructureTable,
    components: &[Vec<usize>],
    block_polys: &[IntPolynomial],
) -> IntMatrix {
    let dim = basis.len();
    let mut cols: Vec<Sparse> = vec![Sparse::new(); dim];
    for (verts, poly) in components.iter().zip(block_polys) {
        let comp = IntMatrix::companion(poly);
        for (b, &vb) in verts.iter().enumerate() {
            for (a, &va) in verts.iter().enumerate() {
                let x = comp.get(a, b);
                if !x.is_zero() {
                    cols[vb].insert(va, x.clone());
                }
            }
        }
    }
    for (i, e) in basis.elements.iter().enumerate() {
        if let Some((u, v)) = e.factors {
            cols[i] = bracket_sparse(table, &cols[u], &cols[v]);
        }
    }
    let mut m = IntMatrix::zeros(dim);
    for (j, col) in cols.into_iter().enumerate() {
        for (i, x) in col {
            m.set(i, j, x);
        }
    }
    m
}

/// Exact check that `m` respects every bracket of the table.
pub fn is_automorphism(basis: &LyndonBasis, table: &StructureTable, m: &IntMatrix) -> bool {
    let cols: Vec<Sparse> = (0..basis.len()).map(|j| column(m, j)).collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis.elements[i].len() + basis.elements[j].len() > basis.c {
                continue;
            }
            let mut lhs = Sparse::new();
            for &(k, coef) in table.bracket(i, j) {
                for (r, x) in &cols[k] {
                    *lhs.entry(*r).or_default() += x * BigInt::from(coef);
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            if lhs != bracket_sparse(table, &cols[i], &cols[j]) {
                return false;
            }
        }
    }
    true
}

/// The matrix induced by `units` raised to `exponents`, on the Lyndon basis
/// of class `c`.
pub fn induced_matrix(
    g: &Graph,
    c: usize,
    units: &[UnitSpec],
    exponents: &[u32],
    caps: &Caps,
) -> Result<IntMatrix> {
    let components = check_assignment(g, c, units)?;
    if exponents.len() != units.len() || exponents.contains(&0) {
        return Err(Error::AssignmentMismatch(
            "one positive exponent per component is required".into(),
        ));
    }
    let basis = enumerate_lyndon(g, c, caps)?;
    let table = structure_constants(g, &basis)?;
    let polys: Vec<IntPolynomial> = units
        .iter()
        .zip(exponents)
        .map(|(u, &n)| power_poly(&u.min_poly, n))
        .collect();
    Ok(matrix_from_blocks(&basis, &table, &components, &polys))
}

/// Char poly and per-block hyperbolicity proofs. Identical block
/// polynomials are proved once.
fn prove_blocks(m: &IntMatrix) -> Result<(IntPolynomial, Vec<BlockProof>)> {
    let mut proved: Vec<(IntPolynomial, HyperbolicityProof)> = Vec::new();
    let mut blocks = Vec::new();
    let mut total = IntPolynomial::one();
    for indices in m.diagonal_blocks() {
        let p = m.principal(&indices).charpoly();
        total = &total * &p;
        let proof = match proved.iter().find(|(q, _)| *q == p) {
            Some((_, pr)) => pr.clone(),
            None => {
                let pr = hyperbolicity(&p)?;
                proved.push((p.clone(), pr.clone()));
                pr
            }
        };
        blocks.push(BlockProof {
            indices,
            char_poly: p,
            proof,
        });
    }
    Ok((total, blocks))
}

/// Builds and proves a witness with the given units, trying exponent
/// tuples in search order until one passes the exact checks.
pub fn build_witness_with_units(
    g: &Graph,
    c: usize,
    units: &[UnitSpec],
    caps: &Caps,
) -> Result<AnosovWitness> {
    let components = check_assignment(g, c, units)?;
    let basis = enumerate_lyndon(g, c, caps)?;
    let table = structure_constants(g, &basis)?;
    let mut search = exponent_search(g, c, units)?;
    while let Some(n) = search.next() {
        let polys: Vec<IntPolynomial> = units
            .iter()
            .zip(&n)
            .map(|(u, &k)| power_poly(&u.min_poly, k))
            .collect();
        let m = matrix_from_blocks(&basis, &table, &components, &polys);
        if !is_automorphism(&basis, &table, &m) {
            return Err(Error::NotAutomorphism(format!("exponents {n:?}")));
        }
        let (char_poly, blocks) = prove_blocks(&m)?;
        let integer_like = is_integer_like(&char_poly)?;
        let hyperbolic = blocks.iter().all(|b| b.proof.hyperbolic);
        if integer_like && hyperbolic {
            let actions = components
                .iter()
                .enumerate()
                .map(|(j, verts)| ComponentAction {
                    component: j,
                    vertices: verts.clone(),
                    unit: units[j].clone(),
                    exponent: n[j],
                    block_poly: polys[j].clone(),
                })
                .collect();
            return Ok(AnosovWitness {
                c,
                actions,
                matrix: m,
                char_poly,
                blocks,
                automorphism: true,
                integer_like,
                hyperbolic,
                candidates_tried: search.tried,
            });
        }
    }
    Err(Error::SearchExhausted(search.tried))
}

/// Default units: distinct catalog entries, assigned to components in order.
pub fn default_units(g: &Graph) -> Result<Vec<UnitSpec>> {
    seeded_units(g, 0)
}

/// Like [`default_units`], starting each degree's catalog at `first`.
pub fn seeded_units(g: &Graph, first: usize) -> Result<Vec<UnitSpec>> {
    let q = QuotientGraph::of(g);
    let mut seeds: BTreeMap<usize, usize> = BTreeMap::new();
    (0..q.node_count())
        .map(|j| {
            let w = q.weight(j);
            let seed = seeds.entry(w).or_insert(first);
            let u = catalog_unit(w, *seed)?;
            *seed += 1;
            Ok(u)
        })
        .collect()
}

/// An explicit Anosov automorphism of the standard rational form, or the
/// reason none is produced.
pub fn build_witness(g: &Graph, c: usize, caps: &Caps) -> Result<AnosovWitness> {
    let verdict = decide_standard(g, c)?;
    if !verdict.anosov {
        let w = verdict.witness.expect("negative verdicts carry a witness");
        return Err(Error::NotAnosov(format!(
            "standard form in class {c}: components {:?} sum to {}",
            w.components.to_vec(),
            w.sum
        )));
    }
    let units = default_units(g)?;
    build_witness_with_units(g, c, &units, caps)
}

/// Re-derives every claim of a witness from scratch.
pub fn verify_witness(g: &Graph, w: &AnosovWitness, caps: &Caps) -> Result<bool> {
    let units: Vec<UnitSpec> = w.actions.iter().map(|a| a.unit.clone()).collect();
    let m = induced_matrix(g, w.c, &units, &w.exponents(), caps)?;
    if m != w.matrix {
        return Ok(false);
    }
    let basis = enumerate_lyndon(g, w.c, caps)?;
    let table = structure_constants(g, &basis)?;
    // The blocks are recomputed from the matrix, so their product is its
    // char poly.
    let (char_poly, blocks) = prove_blocks(&m)?;
    Ok(is_automorphism(&basis, &table, &m)
        && char_poly == w.char_poly
        && is_integer_like(&char_poly)?
        && blocks.iter().all(|b| b.proof.hyperbolic))
}
