//! One function per subcommand. Each returns the JSON and text forms of
//! its result; rendering and exit codes are decided by the caller.

use crate::text;
use crate::{Config, Report};
use anosov_core::decider::{self, oracle_decide, Verdict};
use anosov_core::group::{automorphisms, galois_data, GaloisDatum};
use anosov_core::lyndon::{
    connected_weights, diagonal_eigenvalue_exponents, enumerate_lyndon, structure_constants,
};
use anosov_core::witness::{build_witness_with_units, seeded_units, verify_witness};
use anosov_core::{Error, QuotientGraph};
use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use std::fmt::Write;

/// A mathematically negative outcome reported without a JSON body.
#[derive(Debug)]
pub struct Negative(pub String);

impl std::fmt::Display for Negative {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Negative {}

fn require_class(c: usize) -> Result<()> {
    if c < 2 {
        return Err(Error::ClassTooSmall(c).into());
    }
    Ok(())
}

pub fn analyze(cfg: &Config) -> Result<Report> {
    require_class(cfg.c)?;
    let g = &cfg.graph;
    let q = QuotientGraph::of(g);
    let aut = automorphisms(&q, &cfg.caps)?;
    let basis = enumerate_lyndon(g, cfg.c, &cfg.caps)?;
    let graded = basis.graded_dimensions();
    let dims: Vec<(usize, usize)> = (2..=cfg.c)
        .map(|k| (k, graded.iter().take(k).sum()))
        .collect();
    let edges: Vec<[&str; 2]> = g.edges().into_iter().map(|(u, v)| [g.name(u), g.name(v)]).collect();
    let json = json!({
        "vertices": g.names(),
        "edges": edges,
        "quotient": q.to_json(g),
        "automorphism_group_order": aut.order(),
        "graded_dimensions": graded,
        "dimensions": dims.iter().map(|&(c, d)| json!({"c": c, "dimension": d})).collect::<Vec<_>>(),
    });
    let mut t = String::new();
    writeln!(t, "vertices: {}", g.names().join(" "))?;
    writeln!(
        t,
        "edges: {}",
        edges.iter().map(|[u, v]| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
    )?;
    writeln!(t, "coherent components:")?;
    for n in 0..q.node_count() {
        let mark = if q.has_loop(n) { ", loop" } else { "" };
        writeln!(t, "  {n}: {} weight {}{mark}", text::component(g, &q, n), q.weight(n))?;
    }
    let qedges: Vec<String> = q
        .edges()
        .into_iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| format!("{a}-{b}"))
        .collect();
    writeln!(t, "quotient edges: {}", if qedges.is_empty() { "none".into() } else { qedges.join(" ") })?;
    writeln!(t, "quotient automorphisms: {}", aut.order())?;
    for (c, d) in &dims {
        writeln!(t, "dim c={c}: {d}")?;
    }
    Ok(Report {
        json,
        text: t,
        positive: true,
    })
}

fn load_data(cfg: &Config, q: &QuotientGraph, datum: &str) -> Result<Vec<GaloisDatum>> {
    match datum {
        "standard" => Ok(vec![GaloisDatum::standard(q)]),
        "all" => Ok(galois_data(q, &cfg.caps)?),
        path => {
            let raw = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let value: Value = serde_json::from_str(&raw).with_context(|| format!("parsing {path}"))?;
            Ok(vec![GaloisDatum::from_json(q, &value, &cfg.caps)
                .with_context(|| format!("datum {path}"))?])
        }
    }
}

fn checked_verdict(cfg: &Config, d: &GaloisDatum) -> Result<Verdict> {
    let v = decider::decide(&cfg.graph, cfg.c, d, &cfg.caps)?;
    if cfg.cross_check {
        let o = oracle_decide(&cfg.graph, cfg.c, d, &cfg.caps)?;
        if o != v {
            bail!(
                "cross-check failed for {}: decider says {}, oracle says {}",
                d.label,
                v.anosov,
                o.anosov
            );
        }
    }
    Ok(v)
}

fn row(d: &GaloisDatum, v: &Verdict) -> Value {
    json!({
        "datum": d.to_json(),
        "order": d.h.order(),
        "tau_order": d.tau.order(),
        "verdict": v.to_json(),
    })
}

pub fn decide(cfg: &Config, datum: &str) -> Result<Report> {
    require_class(cfg.c)?;
    let q = QuotientGraph::of(&cfg.graph);
    let data = load_data(cfg, &q, datum)?;
    let mut rows = Vec::new();
    let mut t = String::new();
    let mut all = true;
    for d in &data {
        let v = checked_verdict(cfg, d)?;
        all &= v.anosov;
        t.push_str(&text::verdict(&cfg.graph, &q, &v));
        rows.push(row(d, &v));
    }
    let json = json!({
        "c": cfg.c,
        "verdicts": rows,
        "all_anosov": all,
        "cross_checked": cfg.cross_check,
    });
    Ok(Report {
        json,
        text: t,
        positive: all,
    })
}

pub fn classify(cfg: &Config) -> Result<Report> {
    require_class(cfg.c)?;
    let g = &cfg.graph;
    let q = QuotientGraph::of(g);
    let cl = decider::classify(g, cfg.c, &cfg.caps)?;
    if cfg.cross_check {
        for (d, _) in &cl.rows {
            checked_verdict(cfg, d)?;
        }
    }
    let mut t = format!("{:<40} {:>4} {:>4}  verdict\n", "datum", "|H|", "tau");
    for (d, v) in &cl.rows {
        let detail = match (&v.witness, v.binding.first()) {
            (Some(w), _) => format!("not Anosov, {} sums to {}", text::components(g, &q, w.closure), w.sum),
            (None, Some(b)) => format!("Anosov, margin {}", b.margin(cfg.c)),
            (None, None) => "Anosov".into(),
        };
        writeln!(t, "{:<40} {:>4} {:>4}  {detail}", d.label, d.h.order(), d.tau.order())?;
    }
    writeln!(t, "{} of {} forms Anosov in class {}", cl.anosov_count(), cl.rows.len(), cfg.c)?;
    let mut json = cl.to_json();
    json["cross_checked"] = json!(cfg.cross_check);
    Ok(Report {
        json,
        text: t,
        positive: true,
    })
}

pub fn witness(cfg: &Config) -> Result<Report> {
    require_class(cfg.c)?;
    let g = &cfg.graph;
    let verdict = decider::decide_standard(g, cfg.c)?;
    if let Some(w) = verdict.witness {
        let q = QuotientGraph::of(g);
        return Err(Negative(format!(
            "standard form in class {}: {} sums to {}",
            cfg.c,
            text::components(g, &q, w.closure),
            w.sum
        ))
        .into());
    }
    let units = seeded_units(g, cfg.seed)?;
    let w = build_witness_with_units(g, cfg.c, &units, &cfg.caps)?;
    if !verify_witness(g, &w, &cfg.caps)? {
        bail!("witness failed its own verification");
    }
    let basis = enumerate_lyndon(g, cfg.c, &cfg.caps)?;
    let mut json = w.to_json(g, &basis);
    json["verified"] = json!(true);
    let mut t = format!("Anosov automorphism in class {}, dimension {}\n", cfg.c, w.matrix.size());
    for a in &w.actions {
        let names: Vec<&str> = a.vertices.iter().map(|&v| g.name(v)).collect();
        writeln!(
            t,
            "  {{{}}}: unit {} (min poly {}), exponent {}",
            names.join(","),
            a.unit.label,
            a.unit.min_poly,
            a.exponent
        )?;
    }
    writeln!(t, "characteristic polynomial: {}", w.char_poly)?;
    writeln!(t, "constant term: {}", w.char_poly.coeff(0))?;
    let sturm: usize = w.blocks.iter().map(|b| b.proof.sturm_count).sum();
    writeln!(
        t,
        "{} diagonal blocks, {} roots on the unit circle, verified",
        w.blocks.len(),
        sturm
    )?;
    Ok(Report {
        json,
        text: t,
        positive: true,
    })
}

pub fn basis(cfg: &Config) -> Result<Report> {
    let g = &cfg.graph;
    let b = enumerate_lyndon(g, cfg.c, &cfg.caps)?;
    let table = structure_constants(g, &b)?;
    let mut elements = Vec::new();
    let mut t = format!("{} basis elements up to length {}\n", b.len(), cfg.c);
    for (i, e) in b.elements.iter().enumerate() {
        let tree = b.bracket_tree(i);
        let word: Vec<&str> = e.word.iter().map(|&v| g.name(v as usize)).collect();
        writeln!(t, "  b{i} = {}  weight {:?}", tree.render(g), e.weight.0)?;
        elements.push(json!({
            "index": i,
            "word": word,
            "weight": e.weight.0,
            "bracket": tree.to_json(g),
            "text": tree.render(g),
        }));
    }
    let mut brackets = Vec::new();
    for (i, j) in table.nonzero_pairs() {
        if i >= j {
            continue;
        }
        let terms = table.bracket(i, j);
        let rendered: Vec<String> = terms.iter().map(|(k, a)| format!("{a:+} b{k}")).collect();
        writeln!(t, "  [b{i}, b{j}] = {}", rendered.join(" "))?;
        brackets.push(json!({
            "i": i,
            "j": j,
            "terms": terms.iter().map(|&(k, a)| json!([k, a])).collect::<Vec<_>>(),
        }));
    }
    let json = json!({
        "c": cfg.c,
        "dimension": b.len(),
        "graded_dimensions": b.graded_dimensions(),
        "elements": elements,
        "structure_constants": brackets,
    });
    Ok(Report {
        json,
        text: t,
        positive: true,
    })
}

pub fn weights(cfg: &Config) -> Result<Report> {
    let g = &cfg.graph;
    let support = |s: anosov_core::VertexSet| s.iter().map(|v| g.name(v)).collect::<Vec<_>>();
    let connected = connected_weights(g, cfg.c);
    let basis = diagonal_eigenvalue_exponents(g, cfg.c, &cfg.caps)?;
    let mut t = format!(
        "{} exponent vectors with connected support and total at most {}\n",
        connected.len(),
        cfg.c
    );
    for w in &connected {
        let m = basis.get(w).copied().unwrap_or(0);
        writeln!(t, "  {:?} on {{{}}}, multiplicity {m}", w.0, support(w.support()).join(","))?;
    }
    let json = json!({
        "c": cfg.c,
        "vertices": g.names(),
        "connected_weights": connected
            .iter()
            .map(|w| json!({
                "exponents": w.0,
                "support": support(w.support()),
                "total": w.total(),
            }))
            .collect::<Vec<_>>(),
        "basis_weights": basis
            .iter()
            .map(|(w, m)| json!({"exponents": w.0, "multiplicity": m}))
            .collect::<Vec<_>>(),
    });
    Ok(Report {
        json,
        text: t,
        positive: true,
    })
}
