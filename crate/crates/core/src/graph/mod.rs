//! Finite simple undirected graphs with named, totally ordered vertices.
//!
//! Vertices are identified by their index in declaration order; that order is
//! the total order used by every word and trace computation downstream. Vertex
//! sets are 64-bit masks, so graphs are limited to 64 vertices.

mod families;
mod parse;
mod quotient;

pub use families::*;
pub use parse::parse_graph;
pub use quotient::{
    coherent_components, is_connected_componentset, quotient_graph, CoherentPartition,
    QuotientGraph,
};

use crate::error::{Error, Result};
use std::fmt;

/// Maximum number of vertices supported by the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex (or component) indices below 64.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Least element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// A finite simple undirected graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex names and index pairs.
    ///
    /// Rejects duplicate names, self-loops, duplicate edges, out-of-range
    /// endpoints and more than 64 vertices.
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidInput(format!("duplicate vertex '{name}'")));
            }
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop on '{}'", names[u])));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidInput(format!(
                    "duplicate edge '{}' -- '{}'",
                    names[u], names[v]
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { names, adj })
    }

    /// Builds a graph from string names, edges given by name.
    pub fn from_names<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownVertex(s.to_string()))
        };
        let idx = edges
            .iter()
            .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(names, &idx)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Index of a vertex by name.
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|s| self.vertex(s.as_ref()))
            .collect::<Result<VertexSet>>()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Distinct letters commute in the associated Lie algebra iff they are
    /// not adjacent.
    #[inline]
    pub fn commute(&self, u: usize, v: usize) -> bool {
        u != v && !self.adj[u].contains(v)
    }

    /// Open neighbourhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Open and closed neighbourhood of `v`.
    pub fn neighborhoods(&self, v: usize) -> Result<(VertexSet, VertexSet)> {
        if v >= self.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        Ok((self.adj[v], self.adj[v].with(v)))
    }

    /// Edges as sorted index pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// True iff the induced subgraph on `set` is connected. The empty set is
    /// not connected; singletons are.
    pub fn is_connected_vertexset(&self, set: VertexSet) -> Result<bool> {
        if !set.is_subset(self.vertices()) {
            let bad = set.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        Ok(self.connected_unchecked(set))
    }

    pub(crate) fn connected_unchecked(&self, set: VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(set).difference(seen);
            seen = seen.union(frontier);
        }
        seen == set
    }

    /// Same vertices; an edge exactly where `self` has none.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.vertex_count())
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph {
            names: self.names.clone(),
            adj,
        }
    }

    /// Disjoint union; vertices of `other` follow those of `self`. Clashing
    /// names are suffixed with `'`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let shift = self.vertex_count();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(names, &edges)
    }

    /// Relabels vertices: new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        if order.len() != n || VertexSet::from_indices(order.iter().copied()) != self.vertices() {
            return Err(Error::InvalidInput("order is not a permutation".into()));
        }
        let mut pos = vec![0; n];
        for (i, &o) in order.iter().enumerate() {
            pos[o] = i;
        }
        let names = order.iter().map(|&o| self.names[o].clone()).collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (pos[u], pos[v]))
            .collect();
        Graph::new(names, &edges)
    }

    /// Terse line form: `vertex` lines for every vertex, then one `u -- v`
    /// line per edge.
    pub fn to_terse(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            out.push_str("vertex ");
            out.push_str(name);
            out.push('\n');
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("{} -- {}\n", self.names[u], self.names[v]));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| serde_json::json!([self.names[u], self.names[v]]))
            .collect();
        serde_json::json!({ "vertices": self.names, "edges": edges })
    }
}
