//! Graph input formats.
//!
//! JSON: `{"vertices": ["a", "b"], "edges": [["a", "b"]]}`.
//!
//! Terse: one `u -- v` edge per line, optional `vertex u` lines, `#` starts a
//! comment. Vertex order is the order of first appearance.
//!
//! Input whose first non-blank character is `{` is read as JSON.

use super::Graph;
use crate::error::{Error, Result};
use serde_json::Value;
use std::collections::{HashMap, HashSet};

pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_terse(text)
    }
}

#[derive(Default)]
struct Builder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl Builder {
    fn declare(&mut self, name: &str, at: &str) -> Result<usize> {
        if self.index.contains_key(name) {
            return Err(Error::parse(at, format!("duplicate vertex '{name}'")));
        }
        Ok(self.intern(name))
    }

    fn intern(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), self.names.len() - 1);
        self.names.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize, at: &str) -> Result<()> {
        if u == v {
            return Err(Error::parse(
                at,
                format!("self-loop on '{}'", self.names[u]),
            ));
        }
        let key = (u.min(v), u.max(v));
        if !self.seen.insert(key) {
            return Err(Error::parse(
                at,
                format!("duplicate edge '{}' -- '{}'", self.names[u], self.names[v]),
            ));
        }
        self.edges.push(key);
        Ok(())
    }

    fn finish(self, at: &str) -> Result<Graph> {
        if self.names.is_empty() {
            return Err(Error::parse(at, "graph has no vertices"));
        }
        if self.names.len() > super::MAX_VERTICES {
            return Err(Error::TooManyVertices(self.names.len()));
        }
        Graph::new(self.names, &self.edges)
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|ch| ch.is_whitespace() || ch == '#')
}

fn parse_terse(text: &str) -> Result<Graph> {
    let mut b = Builder::default();
    let mut declared = HashSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let at = format!("line {}", lineno + 1);
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertex") {
            if rest.starts_with(char::is_whitespace) {
                let name = rest.trim();
                if !valid_name(name) {
                    return Err(Error::parse(&at, format!("invalid vertex name '{name}'")));
                }
                if !declared.insert(name.to_string()) {
                    return Err(Error::parse(&at, format!("duplicate vertex '{name}'")));
                }
                b.intern(name);
                continue;
            }
        }
        let Some((lhs, rhs)) = line.split_once("--") else {
            return Err(Error::parse(
                &at,
                format!("expected 'u -- v' or 'vertex u', found '{line}'"),
            ));
        };
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        if !valid_name(lhs) || !valid_name(rhs) || rhs.contains("--") {
            return Err(Error::parse(&at, format!("malformed edge '{line}'")));
        }
        let u = b.intern(lhs);
        let v = b.intern(rhs);
        b.edge(u, v, &at)?;
    }
    b.finish("input")
}

fn parse_json(text: &str) -> Result<Graph> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::parse("$", "expected a JSON object"))?;
    for key in obj.keys() {
        if key != "vertices" && key != "edges" {
            return Err(Error::parse(format!("$.{key}"), "unexpected field"));
        }
    }
    let vertices = obj
        .get("vertices")
        .ok_or_else(|| Error::parse("$.vertices", "missing field"))?
        .as_array()
        .ok_or_else(|| Error::parse("$.vertices", "expected an array"))?;
    let mut b = Builder::default();
    for (i, v) in vertices.iter().enumerate() {
        let at = format!("$.vertices[{i}]");
        let name = v
            .as_str()
            .ok_or_else(|| Error::parse(&at, "expected a string"))?;
        if name.is_empty() {
            return Err(Error::parse(&at, "empty vertex name"));
        }
        b.declare(name, &at)?;
    }
    let edges = match obj.get("edges") {
        None => &[][..],
        Some(e) => e
            .as_array()
            .ok_or_else(|| Error::parse("$.edges", "expected an array"))?
            .as_slice(),
    };
    for (i, e) in edges.iter().enumerate() {
        let at = format!("$.edges[{i}]");
        let pair = match e.as_array() {
            Some(p) if p.len() == 2 => p,
            _ => return Err(Error::parse(&at, "expected a pair [u, v]")),
        };
        let mut ends = [0usize; 2];
        for (k, end) in pair.iter().enumerate() {
            let at = format!("{at}[{k}]");
            let name = end
                .as_str()
                .ok_or_else(|| Error::parse(&at, "expected a string"))?;
            ends[k] = *b
                .index
                .get(name)
                .ok_or_else(|| Error::parse(&at, format!("unknown vertex '{name}'")))?;
        }
        b.edge(ends[0], ends[1], &at)?;
    }
    b.finish("$.vertices")
}
