use super::{automorphisms, normalizer, subgroup_classes, PermGroup, Permutation};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::QuotientGraph;
use serde_json::{json, Value};

/// A subgroup `H` of the quotient automorphism group together with an
/// element `tau ∈ H` of order at most two. `H` plays the image of the
/// absolute Galois group and `tau` the image of complex conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisDatum {
    pub h: PermGroup,
    pub tau: Permutation,
    pub label: String,
}

/// True iff `p` preserves weights, edges and loops of `q`.
pub fn is_automorphism(q: &QuotientGraph, p: &Permutation) -> bool {
    let n = q.node_count();
    p.degree() == n
        && (0..n).all(|v| {
            q.weight(v) == q.weight(p.apply(v))
                && (0..=v).all(|u| q.adjacent(u, v) == q.adjacent(p.apply(u), p.apply(v)))
        })
}

impl GaloisDatum {
    pub fn new(
        q: &QuotientGraph,
        generators: &[Permutation],
        tau: Permutation,
        label: impl Into<String>,
        caps: &Caps,
    ) -> Result<GaloisDatum> {
        for g in generators.iter().chain(std::iter::once(&tau)) {
            if g.degree() != q.node_count() {
                return Err(Error::InvalidDatum(format!(
                    "{g} acts on {} points, quotient has {} nodes",
                    g.degree(),
                    q.node_count()
                )));
            }
            if !is_automorphism(q, g) {
                return Err(Error::InvalidDatum(format!(
                    "{g} is not an automorphism of the quotient graph"
                )));
            }
        }
        let h = PermGroup::generate(q.node_count(), generators, caps.aut)?;
        if !h.contains(&tau) {
            return Err(Error::InvalidDatum(format!("tau {tau} is not in H")));
        }
        if !tau.is_involution_or_identity() {
            return Err(Error::InvalidDatum(format!("tau {tau} does not square to id")));
        }
        Ok(GaloisDatum {
            h,
            tau,
            label: label.into(),
        })
    }

    /// Trivial group with `tau = id`.
    pub fn standard(q: &QuotientGraph) -> GaloisDatum {
        GaloisDatum {
            h: PermGroup::trivial(q.node_count()),
            tau: Permutation::identity(q.node_count()),
            label: "standard".into(),
        }
    }

    pub fn is_standard(&self) -> bool {
        self.h.is_trivial()
    }

    /// Parses `{"generators": [cycles...], "tau": cycles, "label": str}`.
    pub fn from_json(q: &QuotientGraph, value: &Value, caps: &Caps) -> Result<GaloisDatum> {
        let n = q.node_count();
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse("$", "datum must be a JSON object"))?;
        let generators = match obj.get("generators") {
            None => Vec::new(),
            Some(v) => v
                .as_array()
                .ok_or_else(|| Error::parse("$.generators", "expected an array"))?
                .iter()
                .enumerate()
                .map(|(i, g)| parse_cycles(n, g, &format!("$.generators[{i}]")))
                .collect::<Result<Vec<_>>>()?,
        };
        let tau = match obj.get("tau") {
            None => Permutation::identity(n),
            Some(v) => parse_cycles(n, v, "$.tau")?,
        };
        let label = match obj.get("label") {
            None => "custom".to_string(),
            Some(v) => v
                .as_str()
                .ok_or_else(|| Error::parse("$.label", "expected a string"))?
                .to_string(),
        };
        GaloisDatum::new(q, &generators, tau, label, caps)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.h.generators().iter().map(Permutation::cycles).collect::<Vec<_>>(),
            "tau": self.tau.cycles(),
            "label": self.label,
        })
    }
}

fn parse_cycles(n: usize, value: &Value, at: &str) -> Result<Permutation> {
    let cycles = value
        .as_array()
        .ok_or_else(|| Error::parse(at, "expected a list of cycles"))?
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let at = format!("{at}[{i}]");
            c.as_array()
                .ok_or_else(|| Error::parse(&at, "expected a cycle (list of component ids)"))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| Error::parse(&at, "component ids are non-negative integers"))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_cycles(n, &cycles).map_err(|e| Error::parse(at, e.to_string()))
}

/// All Galois data up to simultaneous conjugation by the quotient
/// automorphism group. The standard datum comes first.
pub fn galois_data(q: &QuotientGraph, caps: &Caps) -> Result<Vec<GaloisDatum>> {
    let aut = automorphisms(q, caps)?;
    let mut out = Vec::new();
    for (i, h) in subgroup_classes(&aut, caps)?.into_iter().enumerate() {
        let norm = normalizer(&aut, &h);
        let mut taus: Vec<Permutation> = Vec::new();
        for t in h.involutions_and_identity() {
            // Keep the least element of each orbit under the normaliser.
            let least = norm.iter().map(|x| t.conjugate_by(x)).min().unwrap();
            if !taus.contains(&least) {
                taus.push(least);
            }
        }
        taus.sort_by_key(|t| (!t.is_identity(), t.clone()));
        for tau in taus {
            let label = if i == 0 {
                "standard".to_string()
            } else {
                format!("H{i} order {} tau {tau}", h.order())
            };
            out.push(GaloisDatum {
                h: h.clone(),
                tau,
                label,
            });
        }
    }
    Ok(out)
}

/// True iff some automorphism of `q` conjugates `(H1, tau1)` onto
/// `(H2, tau2)`.
pub fn are_equivalent(
    q: &QuotientGraph,
    d1: &GaloisDatum,
    d2: &GaloisDatum,
    caps: &Caps,
) -> Result<bool> {
    if d1.h.order() != d2.h.order() {
        return Ok(false);
    }
    let aut = automorphisms(q, caps)?;
    Ok(aut.elements().iter().any(|x| {
        d1.tau.conjugate_by(x) == d2.tau
            && d1
                .h
                .generators()
                .iter()
                .all(|g| d2.h.contains(&g.conjugate_by(x)))
    }))
}
