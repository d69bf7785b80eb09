//! The decision rule for Anosov rational forms.
//!
//! A form given by a Galois datum `(H, tau)` is Anosov iff every non-empty
//! connected set `A` of coherent components with `A ∪ tau(A)` invariant
//! under `H` satisfies `c < Σ z(λ)|λ|` over `A ∪ tau(A)`, where `z(λ)` is 1
//! when the `H`-orbit of `λ` meets a `tau`-fixed component and 1/2 otherwise.

mod oracle;

pub use oracle::oracle_decide;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, QuotientGraph, VertexSet};
use crate::group::{galois_data, GaloisDatum};
use num_rational::Rational64;
use serde_json::{json, Value};
use std::collections::HashSet;

/// A connected component set with its closure and weighted sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSum {
    pub components: VertexSet,
    /// `A ∪ tau(A)`.
    pub closure: VertexSet,
    pub sum: Rational64,
}

impl SetSum {
    pub fn margin(&self, c: usize) -> Rational64 {
        self.sum - Rational64::from_integer(c as i64)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "components": self.components.to_vec(),
            "closure": self.closure.to_vec(),
            "sum": format!("{}/{}", self.sum.numer(), self.sum.denom()),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub anosov: bool,
    pub c: usize,
    pub datum: String,
    /// First violating set in canonical order; present iff not Anosov.
    pub witness: Option<SetSum>,
    /// Sets attaining the least margin; empty when not Anosov.
    pub binding: Vec<SetSum>,
}

impl Verdict {
    fn from_sets(c: usize, datum: &str, sets: impl IntoIterator<Item = SetSum>) -> Verdict {
        let limit = Rational64::from_integer(c as i64);
        let mut binding: Vec<SetSum> = Vec::new();
        for s in sets {
            if s.sum <= limit {
                return Verdict {
                    anosov: false,
                    c,
                    datum: datum.to_string(),
                    witness: Some(s),
                    binding: Vec::new(),
                };
            }
            match binding.first().map(|b| s.sum.cmp(&b.sum)) {
                None | Some(std::cmp::Ordering::Equal) => binding.push(s),
                Some(std::cmp::Ordering::Less) => binding = vec![s],
                Some(std::cmp::Ordering::Greater) => {}
            }
        }
        Verdict {
            anosov: true,
            c,
            datum: datum.to_string(),
            witness: None,
            binding,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "anosov": self.anosov,
            "c": self.c,
            "datum": self.datum,
            "witness": self.witness.as_ref().map(SetSum::to_json),
            "binding": self.binding.iter().map(SetSum::to_json).collect::<Vec<_>>(),
        })
    }
}

fn check_class(c: usize) -> Result<()> {
    if c < 2 {
        return Err(Error::ClassTooSmall(c));
    }
    Ok(())
}

fn check_datum(q: &QuotientGraph, d: &GaloisDatum) -> Result<()> {
    if d.h.degree() != q.node_count() || d.tau.degree() != q.node_count() {
        return Err(Error::InvalidDatum(format!(
            "datum acts on {} points, quotient has {} nodes",
            d.h.degree(),
            q.node_count()
        )));
    }
    Ok(())
}

/// `z(λ)` for every component: 1 iff the `H`-orbit of `λ` contains a
/// `tau`-fixed component, else 1/2.
pub fn z_function(q: &QuotientGraph, d: &GaloisDatum) -> Vec<Rational64> {
    let fixed = d.tau.fixed_points();
    (0..q.node_count())
        .map(|v| {
            if d.h.orbit(v).intersection(fixed).is_empty() {
                Rational64::new(1, 2)
            } else {
                Rational64::from_integer(1)
            }
        })
        .collect()
}

/// Sort key for the canonical order: size, then ascending member lists.
pub(crate) fn canonical_key(s: &VertexSet) -> (usize, Vec<usize>) {
    (s.len(), s.to_vec())
}

/// All non-empty connected component sets, in canonical order.
///
/// Sets are grown one adjacent component at a time from singletons; a single
/// component is kept only if its vertices are connected (one vertex, or a
/// clique of two or more).
pub fn connected_subsets(q: &QuotientGraph, caps: &Caps) -> Result<Vec<VertexSet>> {
    let k = q.node_count();
    let mut layer: Vec<VertexSet> = (0..k).map(VertexSet::singleton).collect();
    let mut out: Vec<VertexSet> = layer
        .iter()
        .copied()
        .filter(|&s| q.connected_nodes(s))
        .collect();
    for _ in 1..k {
        let mut next: HashSet<VertexSet> = HashSet::new();
        for s in &layer {
            let boundary = s
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(q.neighbors(v)))
                .difference(*s);
            for v in boundary.iter() {
                next.insert(s.with(v));
            }
        }
        if next.is_empty() {
            break;
        }
        if out.len() + next.len() > caps.connected_sets {
            return Err(Error::CapExceeded {
                what: "connected component sets",
                cap: caps.connected_sets,
            });
        }
        layer = next.into_iter().collect();
        layer.sort_by_key(canonical_key);
        out.extend(layer.iter().copied());
    }
    Ok(out)
}

/// Decides whether the rational form given by `d` is Anosov in class `c`.
pub fn decide(g: &Graph, c: usize, d: &GaloisDatum, caps: &Caps) -> Result<Verdict> {
    check_class(c)?;
    let q = QuotientGraph::of(g);
    check_datum(&q, d)?;
    let z = z_function(&q, d);
    let sets = connected_subsets(&q, caps)?;
    let eligible = sets.into_iter().filter_map(|a| {
        let closure = a.union(d.tau.apply_set(a));
        d.h.is_invariant(closure).then(|| SetSum {
            components: a,
            closure,
            sum: closure
                .iter()
                .map(|v| z[v] * Rational64::from_integer(q.weight(v) as i64))
                .sum(),
        })
    });
    Ok(Verdict::from_sets(c, &d.label, eligible))
}

/// Standard form: Anosov iff every component has at least two vertices and
/// every quotient edge (a loop counting its component once) has weight sum
/// exceeding `c`.
pub fn decide_standard(g: &Graph, c: usize) -> Result<Verdict> {
    check_class(c)?;
    let q = QuotientGraph::of(g);
    let weight_sum = |s: VertexSet| -> SetSum {
        SetSum {
            components: s,
            closure: s,
            sum: Rational64::from_integer(s.iter().map(|v| q.weight(v) as i64).sum()),
        }
    };
    let singletons = (0..q.node_count())
        .filter(|&v| q.weight(v) == 1)
        .map(|v| weight_sum(VertexSet::singleton(v)));
    let mut edges: Vec<VertexSet> = q
        .edges()
        .into_iter()
        .map(|(a, b)| VertexSet::from_indices([a, b]))
        .collect();
    edges.sort_by_key(canonical_key);
    let edges = edges.into_iter().map(weight_sum);
    Ok(Verdict::from_sets(c, "standard", singletons.chain(edges)))
}

/// Real forms (`tau = id`): Anosov iff every non-empty connected
/// `H`-invariant component set has more than `c` vertices.
pub fn decide_real(g: &Graph, c: usize, d: &GaloisDatum, caps: &Caps) -> Result<Verdict> {
    check_class(c)?;
    if !d.tau.is_identity() {
        return Err(Error::TauNotIdentity);
    }
    let q = QuotientGraph::of(g);
    check_datum(&q, d)?;
    let sets = connected_subsets(&q, caps)?;
    let eligible = sets
        .into_iter()
        .filter(|&a| d.h.is_invariant(a))
        .map(|a| SetSum {
            components: a,
            closure: a,
            sum: Rational64::from_integer(q.union_members(a).len() as i64),
        });
    Ok(Verdict::from_sets(c, &d.label, eligible))
}

/// Verdicts for every Galois datum of the graph.
#[derive(Clone, Debug)]
pub struct Classification {
    pub c: usize,
    pub rows: Vec<(GaloisDatum, Verdict)>,
}

impl Classification {
    pub fn no_anosov_forms(&self) -> bool {
        self.rows.iter().all(|(_, v)| !v.anosov)
    }

    pub fn standard_anosov(&self) -> bool {
        self.rows[0].1.anosov
    }

    pub fn anosov_count(&self) -> usize {
        self.rows.iter().filter(|(_, v)| v.anosov).count()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(d, v)| {
                json!({
                    "datum": d.to_json(),
                    "order": d.h.order(),
                    "tau_order": d.tau.order(),
                    "verdict": v.to_json(),
                })
            })
            .collect();
        json!({
            "c": self.c,
            "rows": rows,
            "no_anosov_forms": self.no_anosov_forms(),
            "standard_anosov": self.standard_anosov(),
        })
    }
}

pub fn classify(g: &Graph, c: usize, caps: &Caps) -> Result<Classification> {
    check_class(c)?;
    let q = QuotientGraph::of(g);
    let rows = galois_data(&q, caps)?
        .into_iter()
        .map(|d| {
            let v = decide(g, c, &d, caps)?;
            Ok((d, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification { c, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, graph_from_mask, path_graph, two_cliques};
    use crate::group::{automorphisms, Permutation};
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    fn hexagon_datum(q: &QuotientGraph) -> GaloisDatum {
        let a2 = cyc(6, &[&[0, 2, 4], &[1, 3, 5]]);
        let b = cyc(6, &[&[1, 5], &[2, 4]]);
        GaloisDatum::new(q, &[a2, b.clone()], b, "a^2, b", &Caps::default()).unwrap()
    }

    #[test]
    fn z_examples() {
        let q = QuotientGraph::of(&two_cliques(2));
        assert_eq!(z_function(&q, &GaloisDatum::standard(&q)), vec![r(1, 1); 2]);
        let swap = cyc(2, &[&[0, 1]]);
        let d = GaloisDatum::new(&q, std::slice::from_ref(&swap), swap.clone(), "swap", &Caps::default()).unwrap();
        assert_eq!(z_function(&q, &d), vec![r(1, 2); 2]);
        let q6 = QuotientGraph::of(&cycle_graph(6));
        assert_eq!(z_function(&q6, &hexagon_datum(&q6)), vec![r(1, 1); 6]);
    }

    #[test]
    fn connected_subsets_examples() {
        let caps = Caps::default();
        let q = QuotientGraph::of(&complete_bipartite(2));
        assert_eq!(connected_subsets(&q, &caps).unwrap(), vec![VertexSet::full(2)]);
        let q = QuotientGraph::of(&path_graph(3));
        assert_eq!(
            connected_subsets(&q, &caps).unwrap(),
            vec![VertexSet::singleton(1), VertexSet::full(2)]
        );
        let q = QuotientGraph::of(&cycle_graph(6));
        // Six arcs of each length 1..=5, plus the whole cycle.
        assert_eq!(connected_subsets(&q, &caps).unwrap().len(), 31);
    }

    #[test]
    fn decide_examples() {
        let caps = Caps::default();
        let p3 = path_graph(3);
        let q = QuotientGraph::of(&p3);
        let v = decide(&p3, 2, &GaloisDatum::standard(&q), &caps).unwrap();
        assert!(!v.anosov);
        let w = v.witness.unwrap();
        assert_eq!(w.components, VertexSet::singleton(1));
        assert_eq!(w.sum, r(1, 1));

        let k22 = complete_bipartite(2);
        let q = QuotientGraph::of(&k22);
        let std = GaloisDatum::standard(&q);
        let v3 = decide(&k22, 3, &std, &caps).unwrap();
        assert!(v3.anosov);
        assert_eq!(v3.binding.len(), 1);
        assert_eq!(v3.binding[0].margin(3), r(1, 1));
        let v4 = decide(&k22, 4, &std, &caps).unwrap();
        assert!(!v4.anosov);
        assert_eq!(v4.witness.as_ref().unwrap().components, VertexSet::full(2));
        assert_eq!(v4.witness.unwrap().sum, r(4, 1));

        let c6 = cycle_graph(6);
        let q6 = QuotientGraph::of(&c6);
        assert!(decide(&c6, 2, &hexagon_datum(&q6), &caps).unwrap().anosov);
        assert!(!decide(&c6, 6, &hexagon_datum(&q6), &caps).unwrap().anosov);
        assert!(matches!(
            decide(&c6, 1, &hexagon_datum(&q6), &caps),
            Err(Error::ClassTooSmall(1))
        ));
    }

    #[test]
    fn standard_examples() {
        assert!(!decide_standard(&cycle_graph(6), 2).unwrap().anosov);
        for n in 2..5 {
            for c in 2..9 {
                assert_eq!(decide_standard(&two_cliques(n), c).unwrap().anosov, n > c);
                assert_eq!(decide_standard(&complete_bipartite(n), c).unwrap().anosov, 2 * n > c);
            }
        }
        assert!(decide_standard(&path_graph(3), 1).is_err());
    }

    #[test]
    fn real_examples() {
        let caps = Caps::default();
        let g = two_cliques(3);
        let q = QuotientGraph::of(&g);
        let swap = cyc(2, &[&[0, 1]]);
        let d = GaloisDatum::new(&q, std::slice::from_ref(&swap), Permutation::identity(2), "d>1", &caps)
            .unwrap();
        for c in 2..9 {
            assert!(decide_real(&g, c, &d, &caps).unwrap().anosov);
        }
        let complex = GaloisDatum::new(&q, std::slice::from_ref(&swap), swap.clone(), "d<0", &caps).unwrap();
        assert!(matches!(decide_real(&g, 2, &complex, &caps), Err(Error::TauNotIdentity)));
    }

    #[test]
    fn classify_small() {
        let caps = Caps::default();
        let cls = classify(&two_cliques(2), 2, &caps).unwrap();
        assert_eq!(cls.rows.len(), 3);
        let flags: Vec<bool> = cls.rows.iter().map(|(_, v)| v.anosov).collect();
        assert_eq!(flags, vec![false, true, false]);
        assert!(!cls.standard_anosov());

        // Trivial quotient automorphisms and a singleton component.
        let g = Graph::from_names(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("b", "d")])
            .unwrap();
        let q = QuotientGraph::of(&g);
        assert!(automorphisms(&q, &caps).unwrap().is_trivial());
        let cls = classify(&g, 3, &caps).unwrap();
        assert_eq!(cls.rows.len(), 1);
        assert!(cls.no_anosov_forms());
    }

    fn arb_instance() -> impl Strategy<Value = (Graph, usize)> {
        (2usize..=6).prop_flat_map(|n| {
            let max = (1u64 << (n * (n - 1) / 2)) - 1;
            ((0..=max).prop_map(move |m| graph_from_mask(n, m)), 2usize..=6)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn specialisations_agree((g, c) in arb_instance()) {
            let caps = Caps::default();
            let q = QuotientGraph::of(&g);
            let std = decide_standard(&g, c).unwrap();
            prop_assert_eq!(std.anosov, decide(&g, c, &GaloisDatum::standard(&q), &caps).unwrap().anosov);
            for d in galois_data(&q, &caps).unwrap() {
                let v = decide(&g, c, &d, &caps).unwrap();
                if d.tau.is_identity() {
                    prop_assert_eq!(v.anosov, decide_real(&g, c, &d, &caps).unwrap().anosov);
                    // A standard Anosov form forces every real form to be Anosov.
                    if std.anosov {
                        prop_assert!(v.anosov);
                    }
                }
                if !v.anosov {
                    prop_assert!(!decide(&g, c + 1, &d, &caps).unwrap().anosov);
                }
            }
        }
    }
}
