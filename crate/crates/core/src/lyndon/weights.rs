//! Closed-form weight sets.

use super::basis::{enumerate_lyndon, WeightVector};
use crate::caps::Caps;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// Connected vertex sets with `min..=max` elements.
pub fn connected_vertex_sets(g: &Graph, min: usize, max: usize) -> Vec<VertexSet> {
    let mut layer: HashSet<VertexSet> = (0..g.vertex_count()).map(VertexSet::singleton).collect();
    let mut out = Vec::new();
    for size in 1..=max.min(g.vertex_count()) {
        if size >= min {
            out.extend(layer.iter().copied());
        }
        let mut next = HashSet::new();
        for s in &layer {
            let boundary = s
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)))
                .difference(*s);
            for v in boundary.iter() {
                next.insert(s.with(v));
            }
        }
        layer = next;
    }
    out.sort();
    out
}

/// Exponent vectors supported exactly on `support`, every exponent at least
/// one, total at most `c`.
fn exponents_on(n: usize, support: VertexSet, c: usize, out: &mut impl FnMut(WeightVector)) {
    let verts = support.to_vec();
    let mut e = vec![0u32; n];
    fn rec(
        verts: &[usize],
        i: usize,
        budget: usize,
        e: &mut Vec<u32>,
        out: &mut impl FnMut(WeightVector),
    ) {
        if i == verts.len() {
            out(WeightVector(e.clone()));
            return;
        }
        let reserve = verts.len() - i - 1;
        for k in 1..=budget - reserve {
            e[verts[i]] = k as u32;
            rec(verts, i + 1, budget - k, e, out);
        }
        e[verts[i]] = 0;
    }
    if verts.len() <= c {
        rec(&verts, 0, c, &mut e, out);
    }
}

/// `{e_α} ∪ {e : |supp e| ≥ 2, supp e connected, total ≤ c}`.
pub fn weight_set(g: &Graph, c: usize) -> BTreeSet<WeightVector> {
    let n = g.vertex_count();
    let mut out: BTreeSet<WeightVector> = (0..n).map(|v| WeightVector::unit(n, v)).collect();
    for s in connected_vertex_sets(g, 2, c) {
        exponents_on(n, s, c, &mut |w| {
            out.insert(w);
        });
    }
    out
}

/// Nonzero exponent vectors with connected support and total at most `c`,
/// multiples of a single vertex included.
pub fn connected_weights(g: &Graph, c: usize) -> BTreeSet<WeightVector> {
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    for s in connected_vertex_sets(g, 1, c) {
        exponents_on(n, s, c, &mut |w| {
            out.insert(w);
        });
    }
    out
}

/// Exponent vectors of the eigenvalues of a vertex-diagonal automorphism,
/// with multiplicities (the number of basis elements of each weight).
pub fn diagonal_eigenvalue_exponents(
    g: &Graph,
    c: usize,
    caps: &Caps,
) -> Result<BTreeMap<WeightVector, usize>> {
    let basis = enumerate_lyndon(g, c, caps)?;
    let mut out = BTreeMap::new();
    for e in basis.elements {
        *out.entry(e.weight).or_insert(0) += 1;
    }
    Ok(out)
}
