//! Words over the vertex alphabet and their commutation classes (traces).
//!
//! Two letters commute when they are distinct and non-adjacent in the graph.
//! A trace is represented by its lexicographically greatest word.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A word over vertex indices.
pub type Word = Vec<u8>;

/// Converts vertex names to a word.
pub fn word_from_names<S: AsRef<str>>(g: &Graph, names: &[S]) -> Result<Word> {
    names
        .iter()
        .map(|s| g.vertex(s.as_ref()).map(|v| v as u8))
        .collect()
}

pub fn word_to_names(g: &Graph, w: &[u8]) -> Vec<String> {
    w.iter().map(|&v| g.name(v as usize).to_string()).collect()
}

fn check_letters(g: &Graph, w: &[u8]) -> Result<()> {
    match w.iter().find(|&&v| v as usize >= g.vertex_count()) {
        Some(v) => Err(Error::UnknownVertex(format!("#{v}"))),
        None => Ok(()),
    }
}

/// Greatest word in the commutation class of `w`.
pub fn trace_normal_form(g: &Graph, w: &[u8]) -> Result<Word> {
    check_letters(g, w)?;
    Ok(normal_form(g, w))
}

/// Greedy construction: the greatest class representative starts with the
/// greatest letter that can be moved to the front, followed by the greatest
/// representative of what remains.
pub(crate) fn normal_form(g: &Graph, w: &[u8]) -> Word {
    let mut rest: Vec<u8> = w.to_vec();
    let mut out = Vec::with_capacity(w.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            let x = rest[i];
            let movable = rest[..i]
                .iter()
                .all(|&y| g.commute(x as usize, y as usize));
            if movable && best.is_none_or(|b| rest[b] < x) {
                best = Some(i);
            }
        }
        out.push(rest.remove(best.expect("the first letter is always movable")));
    }
    out
}

/// Whether appending `x` to a normal form keeps it a normal form.
#[inline]
pub(crate) fn appendable(g: &Graph, w: &[u8], x: u8) -> bool {
    for &y in w.iter().rev() {
        if y == x || !g.commute(x as usize, y as usize) {
            return true;
        }
        if y < x {
            return false;
        }
    }
    true
}

/// True iff `w` is the greatest word of its commutation class.
pub fn is_normal_form(g: &Graph, w: &[u8]) -> bool {
    (1..w.len()).all(|j| appendable(g, &w[..j], w[j]))
}

/// Strictly smaller than every nontrivial rotation (hence primitive).
pub fn is_lyndon_word(w: &[u8]) -> bool {
    !w.is_empty()
        && (1..w.len()).all(|k| {
            let rotated = w[k..].iter().chain(&w[..k]);
            w.iter().lt(rotated)
        })
}

/// True iff the greatest representative of the class of `w` is a Lyndon
/// word.
pub fn is_lyndon_element(g: &Graph, w: &[u8]) -> Result<bool> {
    Ok(is_lyndon_word(&trace_normal_form(g, w)?))
}

/// Per-vertex letter counts.
pub fn weight_of(n: usize, w: &[u8]) -> Vec<u32> {
    let mut e = vec![0; n];
    for &x in w {
        e[x as usize] += 1;
    }
    e
}

/// A commutation class of words, stored by its greatest representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trace {
    std: Word,
}

impl Trace {
    pub fn new(g: &Graph, w: &[u8]) -> Result<Trace> {
        Ok(Trace {
            std: trace_normal_form(g, w)?,
        })
    }

    pub fn std(&self) -> &[u8] {
        &self.std
    }

    pub fn len(&self) -> usize {
        self.std.len()
    }

    pub fn is_empty(&self) -> bool {
        self.std.is_empty()
    }

    pub fn weight(&self, g: &Graph) -> Vec<u32> {
        weight_of(g.vertex_count(), &self.std)
    }

    /// Concatenation of traces.
    pub fn concat(&self, g: &Graph, other: &Trace) -> Trace {
        let mut w = self.std.clone();
        w.extend_from_slice(&other.std);
        Trace {
            std: normal_form(g, &w),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, graph_from_mask, path_graph};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Every word reachable by swapping adjacent commuting letters.
    pub(crate) fn commutation_class(g: &Graph, w: &[u8]) -> BTreeSet<Word> {
        let mut seen = BTreeSet::from([w.to_vec()]);
        let mut stack = vec![w.to_vec()];
        while let Some(x) = stack.pop() {
            for i in 0..x.len().saturating_sub(1) {
                if g.commute(x[i] as usize, x[i + 1] as usize) {
                    let mut y = x.clone();
                    y.swap(i, i + 1);
                    if seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
        }
        seen
    }

    fn p3() -> Graph {
        Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let g = p3();
        let w = |s: &[&str]| word_from_names(&g, s).unwrap();
        assert_eq!(trace_normal_form(&g, &w(&["a", "c"])).unwrap(), w(&["c", "a"]));
        assert_eq!(trace_normal_form(&g, &w(&["a", "b"])).unwrap(), w(&["a", "b"]));
        let k = complete_bipartite(2);
        let a = word_from_names(&k, &["a1", "a2"]).unwrap();
        let expected = word_from_names(&k, &["a2", "a1"]).unwrap();
        assert_eq!(trace_normal_form(&k, &a).unwrap(), expected);
        assert_eq!(*commutation_class(&k, &a).iter().max().unwrap(), expected);
        assert!(trace_normal_form(&g, &[0, 9]).is_err());
    }

    #[test]
    fn bubbling_is_not_enough() {
        // Order a < x < y with a edge a - y and x isolated. Moving each
        // letter left past smaller commuting letters leaves "a y x", yet
        // "x a y" is in the class and greater.
        let g = Graph::from_names(&["a", "x", "y"], &[("a", "y")]).unwrap();
        let w = word_from_names(&g, &["a", "y", "x"]).unwrap();
        let nf = trace_normal_form(&g, &w).unwrap();
        assert_eq!(nf, word_from_names(&g, &["x", "a", "y"]).unwrap());
        assert_eq!(nf, *commutation_class(&g, &w).iter().max().unwrap());
    }

    #[test]
    fn lyndon_element_examples() {
        let g = p3();
        let w = |s: &[&str]| word_from_names(&g, s).unwrap();
        assert!(is_lyndon_element(&g, &w(&["a", "b"])).unwrap());
        assert!(!is_lyndon_element(&g, &w(&["a", "c"])).unwrap());
        assert!(!is_lyndon_element(&g, &w(&["a", "a"])).unwrap());
        assert!(!is_lyndon_element(&path_graph(2), &[]).unwrap());
    }

    #[test]
    fn lyndon_words() {
        assert!(is_lyndon_word(&[0]));
        assert!(is_lyndon_word(&[0, 1]));
        assert!(is_lyndon_word(&[0, 0, 1, 0, 1]));
        assert!(!is_lyndon_word(&[0, 1, 0, 1]));
        assert!(!is_lyndon_word(&[1, 0]));
        assert!(!is_lyndon_word(&[]));
    }

    fn arb_graph_and_word() -> impl Strategy<Value = (Graph, Word)> {
        (1usize..=5).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            let max = if pairs == 0 { 0 } else { (1u64 << pairs) - 1 };
            (
                (0..=max).prop_map(move |m| graph_from_mask(n, m)),
                prop::collection::vec(0..n as u8, 0..=7),
            )
        })
    }

    proptest! {
        #[test]
        fn normal_form_is_class_maximum((g, w) in arb_graph_and_word()) {
            let class = commutation_class(&g, &w);
            let nf = trace_normal_form(&g, &w).unwrap();
            prop_assert_eq!(&nf, class.iter().max().unwrap());
            for x in &class {
                prop_assert_eq!(is_normal_form(&g, x), x == &nf);
            }
        }
    }
}
