//! Brute-force decision over all subsets of components, for cross-checking.

use super::{canonical_key, check_class, check_datum, SetSum, Verdict};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{is_connected_componentset, Graph, QuotientGraph, VertexSet};
use crate::group::GaloisDatum;
use num_rational::Rational64;

/// Same contract as [`super::decide`], computed from the definitions: `z` by
/// searching `σ ∈ H` with `tau σ(λ) = σ(λ)`, invariance by testing every
/// element of `H`, connectivity on the vertex level, every subset visited.
pub fn oracle_decide(g: &Graph, c: usize, d: &GaloisDatum, caps: &Caps) -> Result<Verdict> {
    check_class(c)?;
    let q = QuotientGraph::of(g);
    check_datum(&q, d)?;
    let k = q.node_count();
    if k > caps.oracle_nodes {
        return Err(Error::CapExceeded {
            what: "oracle component count",
            cap: caps.oracle_nodes,
        });
    }
    let z: Vec<Rational64> = (0..k)
        .map(|l| {
            let fixed = d
                .h
                .elements()
                .iter()
                .any(|s| d.tau.apply(s.apply(l)) == s.apply(l));
            if fixed {
                Rational64::from_integer(1)
            } else {
                Rational64::new(1, 2)
            }
        })
        .collect();
    let mut subsets: Vec<VertexSet> = (1..1u64 << k).map(VertexSet).collect();
    subsets.sort_by_key(canonical_key);
    let mut eligible = Vec::new();
    for a in subsets {
        if !is_connected_componentset(g, &q, a)? {
            continue;
        }
        let closure = a.union(d.tau.apply_set(a));
        if !d.h.elements().iter().all(|h| h.apply_set(closure) == closure) {
            continue;
        }
        let sum = closure
            .iter()
            .map(|l| z[l] * Rational64::from_integer(q.weight(l) as i64))
            .sum();
        eligible.push(SetSum {
            components: a,
            closure,
            sum,
        });
    }
    Ok(Verdict::from_sets(c, &d.label, eligible))
}
