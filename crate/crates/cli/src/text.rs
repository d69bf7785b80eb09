//! Plain-text rendering helpers.

use anosov_core::decider::{SetSum, Verdict};
use anosov_core::{Graph, QuotientGraph, VertexSet};
use std::fmt::Write;

/// `{a,b}` for one component.
pub fn component(g: &Graph, q: &QuotientGraph, node: usize) -> String {
    let names: Vec<&str> = q.members(node).iter().map(|v| g.name(v)).collect();
    format!("{{{}}}", names.join(","))
}

/// Components of a node set, space separated.
pub fn components(g: &Graph, q: &QuotientGraph, nodes: VertexSet) -> String {
    nodes
        .iter()
        .map(|n| component(g, q, n))
        .collect::<Vec<_>>()
        .join(" ")
}

fn set_sum(g: &Graph, q: &QuotientGraph, s: &SetSum) -> String {
    let mut out = format!("A = {}", components(g, q, s.components));
    if s.closure != s.components {
        let _ = write!(out, ", with tau(A) = {}", components(g, q, s.closure));
    }
    let _ = write!(out, ", sum {}", s.sum);
    out
}

pub fn verdict(g: &Graph, q: &QuotientGraph, v: &Verdict) -> String {
    let mut out = format!(
        "{}: {} in class {}\n",
        v.datum,
        if v.anosov { "Anosov" } else { "not Anosov" },
        v.c
    );
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "  violated by {}", set_sum(g, q, w));
    }
    for b in &v.binding {
        let _ = writeln!(out, "  tightest: {}", set_sum(g, q, b));
    }
    out
}
