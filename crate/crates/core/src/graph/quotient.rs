//! Coherent components and the weighted quotient graph.
//!
//! Two vertices are coherent when swapping them is a graph automorphism,
//! i.e. `N(a) \ {b} = N(b) \ {a}`. Coherence is an equivalence relation; a
//! class is either an independent set or a clique, and adjacency between two
//! classes is all-or-nothing.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Partition of the vertices into coherent components, sorted by least vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentPartition {
    pub components: Vec<VertexSet>,
    /// Component id of each vertex.
    pub index: Vec<usize>,
}

impl CoherentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Builds a partition from vertex classes, re-sorting by least vertex.
    pub fn from_classes(n: usize, mut classes: Vec<VertexSet>) -> Result<Self> {
        classes.sort_by_key(|c| c.first());
        let mut index = vec![usize::MAX; n];
        for (id, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InconsistentPartition("empty class".into()));
            }
            for v in class.iter() {
                if v >= n {
                    return Err(Error::InconsistentPartition(format!("vertex #{v} out of range")));
                }
                if index[v] != usize::MAX {
                    return Err(Error::InconsistentPartition(format!(
                        "vertex #{v} in two classes"
                    )));
                }
                index[v] = id;
            }
        }
        if let Some(v) = index.iter().position(|&i| i == usize::MAX) {
            return Err(Error::InconsistentPartition(format!("vertex #{v} uncovered")));
        }
        Ok(CoherentPartition {
            components: classes,
            index,
        })
    }
}

fn coherent(g: &Graph, a: usize, b: usize) -> bool {
    g.neighbors(a).without(b) == g.neighbors(b).without(a)
}

pub fn coherent_components(g: &Graph) -> CoherentPartition {
    let mut components: Vec<VertexSet> = Vec::new();
    let mut index = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        // Comparing against the least member suffices since coherence is
        // transitive.
        let found = components
            .iter()
            .position(|c| coherent(g, c.first().unwrap(), v));
        match found {
            Some(id) => {
                components[id].insert(v);
                index.push(id);
            }
            None => {
                components.push(VertexSet::singleton(v));
                index.push(components.len() - 1);
            }
        }
    }
    CoherentPartition { components, index }
}

/// Weighted graph on coherent components. Node ids are component ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    members: Vec<VertexSet>,
    adj: Vec<VertexSet>,
    loops: VertexSet,
}

impl QuotientGraph {
    /// Quotient of `g` by its coherent components.
    pub fn of(g: &Graph) -> QuotientGraph {
        quotient_graph(g, &coherent_components(g)).expect("coherent partition is consistent")
    }

    /// Builds a quotient graph directly from weights, edges and loops. Used
    /// for group computations that do not need an underlying graph.
    pub fn from_parts(weights: &[usize], edges: &[(usize, usize)]) -> Result<QuotientGraph> {
        let k = weights.len();
        let mut next = 0;
        let mut members = Vec::with_capacity(k);
        for &w in weights {
            if w == 0 {
                return Err(Error::InvalidInput("component weight must be positive".into()));
            }
            members.push(VertexSet::from_indices(next..next + w));
            next += w;
        }
        let mut adj = vec![VertexSet::EMPTY; k];
        let mut loops = VertexSet::EMPTY;
        for &(a, b) in edges {
            if a >= k || b >= k {
                return Err(Error::UnknownComponent(a.max(b)));
            }
            if a == b {
                loops.insert(a);
            } else {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        Ok(QuotientGraph {
            members,
            adj,
            loops,
        })
    }

    pub fn node_count(&self) -> usize {
        self.members.len()
    }

    pub fn nodes(&self) -> VertexSet {
        VertexSet::full(self.node_count())
    }

    pub fn weight(&self, node: usize) -> usize {
        self.members[node].len()
    }

    pub fn weights(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.len()).collect()
    }

    /// Underlying vertex set of a component.
    pub fn members(&self, node: usize) -> VertexSet {
        self.members[node]
    }

    /// Union of the underlying vertex sets of `nodes`.
    pub fn union_members(&self, nodes: VertexSet) -> VertexSet {
        nodes
            .iter()
            .fold(VertexSet::EMPTY, |acc, n| acc.union(self.members[n]))
    }

    /// Adjacent distinct nodes (loops excluded).
    pub fn neighbors(&self, node: usize) -> VertexSet {
        self.adj[node]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        if a == b {
            self.loops.contains(a)
        } else {
            self.adj[a].contains(b)
        }
    }

    pub fn has_loop(&self, node: usize) -> bool {
        self.loops.contains(node)
    }

    pub fn loops(&self) -> VertexSet {
        self.loops
    }

    /// Edges `(a, b)` with `a <= b`, loops as `(a, a)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.node_count() {
            if self.loops.contains(a) {
                out.push((a, a));
            }
            for b in self.adj[a].iter().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    pub(crate) fn check_nodes(&self, nodes: VertexSet) -> Result<()> {
        match nodes.difference(self.nodes()).first() {
            Some(bad) => Err(Error::UnknownComponent(bad)),
            None => Ok(()),
        }
    }

    /// Whether a set of nodes is connected in the sense used by the decision
    /// rule. For two or more nodes this is connectivity of the quotient
    /// graph without loops; a single node is connected iff it is a single
    /// vertex or carries a loop. Agrees with [`is_connected_componentset`].
    pub(crate) fn connected_nodes(&self, nodes: VertexSet) -> bool {
        match nodes.len() {
            0 => false,
            1 => {
                let n = nodes.first().unwrap();
                self.weight(n) == 1 || self.has_loop(n)
            }
            _ => {
                let start = nodes.first().unwrap();
                let mut seen = VertexSet::singleton(start);
                let mut frontier = seen;
                while !frontier.is_empty() {
                    let mut next = VertexSet::EMPTY;
                    for v in frontier.iter() {
                        next = next.union(self.adj[v]);
                    }
                    frontier = next.intersection(nodes).difference(seen);
                    seen = seen.union(frontier);
                }
                seen == nodes
            }
        }
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let components: Vec<Vec<&str>> = self
            .members
            .iter()
            .map(|m| m.iter().map(|v| g.name(v)).collect())
            .collect();
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(a, b)| [a, b]).collect();
        serde_json::json!({
            "components": components,
            "weights": self.weights(),
            "edges": edges,
            "loops": self.loops.to_vec(),
        })
    }
}

pub fn quotient_graph(g: &Graph, p: &CoherentPartition) -> Result<QuotientGraph> {
    let n = g.vertex_count();
    let rebuilt = CoherentPartition::from_classes(n, p.components.clone())?;
    if &rebuilt != p {
        return Err(Error::InconsistentPartition(
            "classes must be sorted by least vertex with a matching index".into(),
        ));
    }
    for class in &p.components {
        let first = class.first().unwrap();
        if let Some(bad) = class.iter().find(|&v| !coherent(g, first, v)) {
            return Err(Error::InconsistentPartition(format!(
                "'{}' and '{}' are not coherent",
                g.name(first),
                g.name(bad)
            )));
        }
    }
    if p.components.len() != coherent_components(g).len() {
        return Err(Error::InconsistentPartition(
            "partition is finer than the coherent components".into(),
        ));
    }
    let k = p.len();
    let mut adj = vec![VertexSet::EMPTY; k];
    let mut loops = VertexSet::EMPTY;
    for (u, v) in g.edges() {
        let (a, b) = (p.index[u], p.index[v]);
        if a == b {
            loops.insert(a);
        } else {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    Ok(QuotientGraph {
        members: p.components.clone(),
        adj,
        loops,
    })
}

/// True iff the union of the vertex sets of `nodes` induces a connected
/// subgraph of `g`. A single component may fail this.
pub fn is_connected_componentset(g: &Graph, q: &QuotientGraph, nodes: VertexSet) -> Result<bool> {
    q.check_nodes(nodes)?;
    g.is_connected_vertexset(q.union_members(nodes))
}
