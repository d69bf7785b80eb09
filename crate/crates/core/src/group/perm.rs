use crate::error::{Error, Result};
use crate::graph::VertexSet;
use std::fmt;

/// A permutation of `{0, .., n-1}` with `n <= 64`, stored by images.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= 64);
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > 64 {
            return Err(Error::InvalidPermutation(format!("degree {n} exceeds 64")));
        }
        let mut seen = VertexSet::EMPTY;
        for &x in images {
            if x >= n || seen.contains(x) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen.insert(x);
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n > 64 {
            return Err(Error::InvalidPermutation(format!("degree {n} exceeds 64")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = VertexSet::EMPTY;
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::UnknownComponent(x));
                }
                if used.contains(x) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears twice in cycles"
                    )));
                }
                used.insert(x);
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn apply_set(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|x| self.apply(x)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for i in 0..self.degree() {
            images[g.apply(i)] = g.images[self.apply(i)];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_involution_or_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x as usize] as usize == i)
    }

    pub fn fixed_points(&self) -> VertexSet {
        (0..self.degree()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that
    /// point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen.contains(start) || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut x = self.apply(start);
            while x != start {
                cycle.push(x);
                seen.insert(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted lengths of all cycles, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.fixed_points().len()));
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
