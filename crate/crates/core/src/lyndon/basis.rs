//! Enumeration of Lyndon elements of bounded length.
//!
//! Words are grown letter by letter while two prefix-closed properties are
//! maintained: being the greatest representative of its class, and being a
//! prenecklace (tracked with the period of the Fredricksen-Kessler-Maiorana
//! algorithm). A prenecklace whose length equals its period is a Lyndon word.

use super::trace::{appendable, weight_of, Word};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use std::collections::HashMap;

/// Exponent vector over the vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(pub Vec<u32>);

impl WeightVector {
    pub fn unit(n: usize, v: usize) -> WeightVector {
        let mut e = vec![0; n];
        e[v] = 1;
        WeightVector(e)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(v, _)| v)
            .collect()
    }
}

/// A binary bracketing of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTree {
    Leaf(usize),
    Bracket(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn render(&self, g: &Graph) -> String {
        match self {
            BracketTree::Leaf(v) => g.name(*v).to_string(),
            BracketTree::Bracket(a, b) => format!("[{}, {}]", a.render(g), b.render(g)),
        }
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        match self {
            BracketTree::Leaf(v) => serde_json::Value::String(g.name(*v).to_string()),
            BracketTree::Bracket(a, b) => serde_json::json!([a.to_json(g), b.to_json(g)]),
        }
    }
}

/// One basis element: a Lyndon element together with the standard
/// factorisation of its greatest representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonElement {
    pub word: Word,
    pub weight: WeightVector,
    /// Indices of the left and right factors; `None` for single letters.
    pub factors: Option<(usize, usize)>,
}

impl LyndonElement {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Lyndon elements of length at most `c`, ordered by length then word.
#[derive(Clone, Debug)]
pub struct LyndonBasis {
    pub c: usize,
    pub elements: Vec<LyndonElement>,
    index: HashMap<Word, usize>,
}

impl LyndonBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, word: &[u8]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn bracket_tree(&self, i: usize) -> BracketTree {
        let e = &self.elements[i];
        match e.factors {
            None => BracketTree::Leaf(e.word[0] as usize),
            Some((u, v)) => BracketTree::Bracket(
                Box::new(self.bracket_tree(u)),
                Box::new(self.bracket_tree(v)),
            ),
        }
    }

    /// Number of elements of each length `1..=c`.
    pub fn graded_dimensions(&self) -> Vec<usize> {
        let mut dims = vec![0; self.c];
        for e in &self.elements {
            dims[e.len() - 1] += 1;
        }
        dims
    }
}

/// Position of the standard right factor: the least proper suffix.
fn standard_split(w: &[u8]) -> usize {
    (1..w.len()).min_by(|&i, &j| w[i..].cmp(&w[j..])).unwrap()
}

pub fn enumerate_lyndon(g: &Graph, c: usize, caps: &Caps) -> Result<LyndonBasis> {
    if c == 0 {
        return Err(Error::InvalidInput("length bound must be at least 1".into()));
    }
    caps.check_c(c)?;
    let n = g.vertex_count();
    let mut words: Vec<Word> = Vec::new();
    let mut word = Vec::with_capacity(c);
    for x in 0..n as u8 {
        word.push(x);
        grow(g, c, &mut word, 1, &mut words, caps.basis)?;
        word.pop();
    }
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: HashMap<Word, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let elements = words
        .iter()
        .map(|w| {
            let factors = (w.len() > 1).then(|| {
                let k = standard_split(w);
                (index[&w[..k]], index[&w[k..]])
            });
            LyndonElement {
                word: w.clone(),
                weight: WeightVector(weight_of(n, w)),
                factors,
            }
        })
        .collect();
    Ok(LyndonBasis { c, elements, index })
}

fn grow(
    g: &Graph,
    c: usize,
    word: &mut Word,
    period: usize,
    out: &mut Vec<Word>,
    cap: usize,
) -> Result<()> {
    let t = word.len();
    if period == t {
        out.push(word.clone());
        if out.len() > cap {
            return Err(Error::CapExceeded {
                what: "Lyndon basis size",
                cap,
            });
        }
    }
    if t == c {
        return Ok(());
    }
    let floor = word[t - period];
    for x in floor..g.vertex_count() as u8 {
        if !appendable(g, word, x) {
            continue;
        }
        let next_period = if x == floor { period } else { t + 1 };
        word.push(x);
        grow(g, c, word, next_period, out, cap)?;
        word.pop();
    }
    Ok(())
}

/// Dimension of the free `c`-step nilpotent partially commutative Lie
/// algebra of the graph.
pub fn dimension(g: &Graph, c: usize, caps: &Caps) -> Result<usize> {
    Ok(enumerate_lyndon(g, c, caps)?.len())
}
