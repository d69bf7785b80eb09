//! Bracket structure constants of the Lyndon basis.
//!
//! Each basis element is expanded as an iterated commutator in the trace
//! algebra (integer combinations of traces). Its least trace is its own
//! word with coefficient ±1, so any Lie element can be written in the basis
//! by repeatedly cancelling its least trace.

use super::basis::LyndonBasis;
use super::trace::{normal_form, Word};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::{BTreeMap, HashMap};

/// Integer combination of traces keyed by greatest representative.
pub type TraceCombination = BTreeMap<Word, i64>;

fn add_scaled(acc: &mut TraceCombination, p: &TraceCombination, k: i64) {
    for (w, &a) in p {
        let slot = acc.entry(w.clone()).or_insert(0);
        *slot = slot
            .checked_add(k.checked_mul(a).expect("coefficient overflow"))
            .expect("coefficient overflow");
        if *slot == 0 {
            acc.remove(w);
        }
    }
}

fn multiply(g: &Graph, p: &TraceCombination, q: &TraceCombination) -> TraceCombination {
    let mut out = TraceCombination::new();
    for (u, &a) in p {
        for (v, &b) in q {
            let mut w = u.clone();
            w.extend_from_slice(v);
            let key = normal_form(g, &w);
            let slot = out.entry(key).or_insert(0);
            *slot += a * b;
        }
    }
    out.retain(|_, a| *a != 0);
    out
}

/// `pq - qp` in the trace algebra.
pub fn commutator(g: &Graph, p: &TraceCombination, q: &TraceCombination) -> TraceCombination {
    let mut out = multiply(g, p, q);
    add_scaled(&mut out, &multiply(g, q, p), -1);
    out
}

/// Expansions of all basis elements, checked for a unit leading term.
pub fn expansions(g: &Graph, basis: &LyndonBasis) -> Result<Vec<TraceCombination>> {
    let mut out: Vec<TraceCombination> = Vec::with_capacity(basis.len());
    for e in &basis.elements {
        let p = match e.factors {
            None => TraceCombination::from([(e.word.clone(), 1)]),
            Some((u, v)) => commutator(g, &out[u], &out[v]),
        };
        match p.first_key_value() {
            Some((w, &a)) if *w == e.word && a.abs() == 1 => {}
            other => {
                return Err(Error::Triangularity(format!(
                    "element {:?} has least trace {:?}",
                    e.word, other
                )))
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Coordinates of a Lie element (given in the trace algebra) in the basis.
pub fn coordinates(
    basis: &LyndonBasis,
    expansions: &[TraceCombination],
    mut x: TraceCombination,
) -> Result<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    while let Some((w, &a)) = x.first_key_value() {
        let k = basis.index_of(w).ok_or_else(|| {
            Error::Triangularity(format!("least trace {w:?} is not a basis element"))
        })?;
        let lead = expansions[k][w];
        let coef = a * lead;
        add_scaled(&mut x, &expansions[k], -coef);
        out.push((k, coef));
    }
    out.sort_unstable();
    Ok(out)
}

/// Sparse bracket table on a Lyndon basis: `[b_i, b_j] = Σ coef · b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    pub c: usize,
    pub dim: usize,
    table: HashMap<(usize, usize), Vec<(usize, i64)>>,
}

impl StructureTable {
    /// Nonzero coordinates of `[b_i, b_j]`, sorted by index.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, i64)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// All pairs with a nonzero bracket, sorted.
    pub fn nonzero_pairs(&self) -> Vec<(usize, usize)> {
        let mut keys: Vec<_> = self.table.keys().copied().collect();
        keys.sort_unstable();
        keys
    }

    /// Bracket of two sparse integer vectors.
    pub fn bracket_vectors(
        &self,
        x: &BTreeMap<usize, i64>,
        y: &BTreeMap<usize, i64>,
    ) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (&i, &a) in x {
            for (&j, &b) in y {
                for &(k, coef) in self.bracket(i, j) {
                    *out.entry(k).or_insert(0) += a * b * coef;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

pub fn structure_constants(g: &Graph, basis: &LyndonBasis) -> Result<StructureTable> {
    let exps = expansions(g, basis)?;
    let mut table = HashMap::new();
    let n = basis.len();
    for i in 0..n {
        for j in i + 1..n {
            if basis.elements[i].len() + basis.elements[j].len() > basis.c {
                continue;
            }
            let coords = coordinates(basis, &exps, commutator(g, &exps[i], &exps[j]))?;
            if !coords.is_empty() {
                let negated = coords.iter().map(|&(k, a)| (k, -a)).collect();
                table.insert((i, j), coords);
                table.insert((j, i), negated);
            }
        }
    }
    Ok(StructureTable {
        c: basis.c,
        dim: n,
        table,
    })
}
