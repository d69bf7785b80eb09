//! Named graph families used throughout the examples and tests.

use super::Graph;

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn build(names: Vec<String>, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(names, &edges).expect("family constructors produce valid graphs")
}

/// `n` isolated vertices `v1..vn`.
pub fn empty_graph(n: usize) -> Graph {
    build(numbered("v", n), Vec::new())
}

/// Complete graph on `v1..vn`.
pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(numbered("v", n), edges)
}

/// Path `v1 - v2 - .. - vn`.
pub fn path_graph(n: usize) -> Graph {
    let edges = (1..n).map(|v| (v - 1, v)).collect();
    build(numbered("v", n), edges)
}

/// Cycle `v1 - v2 - .. - vn - v1`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges = (0..n).map(|v| (v.min((v + 1) % n), v.max((v + 1) % n))).collect();
    build(numbered("v", n), edges)
}

/// Star with centre `v1` and leaves `v2..vn`.
pub fn star_graph(n: usize) -> Graph {
    let edges = (1..n).map(|v| (0, v)).collect();
    build(numbered("v", n), edges)
}

/// `K_{n,n}` with parts `a1..an` and `b1..bn`, the `a`s declared first.
pub fn complete_bipartite(n: usize) -> Graph {
    let mut names = numbered("a", n);
    names.extend(numbered("b", n));
    let edges = (0..n)
        .flat_map(|u| (n..2 * n).map(move |v| (u, v)))
        .collect();
    build(names, edges)
}

/// Two disjoint copies of `K_n` on `a1..an` and `b1..bn`.
pub fn two_cliques(n: usize) -> Graph {
    let mut names = numbered("a", n);
    names.extend(numbered("b", n));
    let mut edges = Vec::new();
    for base in [0, n] {
        for u in 0..n {
            for v in u + 1..n {
                edges.push((base + u, base + v));
            }
        }
    }
    build(names, edges)
}

/// Graph from a bitmask over the pairs `(u, v)`, `u < v`, in lexicographic
/// order. Handy for exhaustive and random corpora.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    build(numbered("v", n), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(cycle_graph(6).edge_count(), 6);
        assert_eq!(path_graph(4).edge_count(), 3);
        assert_eq!(complete_bipartite(3).edge_count(), 9);
        assert_eq!(two_cliques(3).edge_count(), 6);
        assert_eq!(graph_from_mask(4, 0b111111), complete_graph(4));
    }
}
