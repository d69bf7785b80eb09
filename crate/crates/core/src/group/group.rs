use super::Permutation;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{QuotientGraph, VertexSet};
use std::collections::{BTreeMap, HashMap, HashSet};

/// A permutation group with its elements materialised in sorted order.
/// Equality compares element sets, not generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// The group generated by `generators`, failing if its order exceeds
    /// `cap`.
    pub fn generate(degree: usize, generators: &[Permutation], cap: usize) -> Result<PermGroup> {
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "{bad} has degree {} but the group acts on {degree} points",
                bad.degree()
            )));
        }
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut elements = closure(degree, &gens, cap)?;
        elements.sort();
        Ok(PermGroup {
            degree,
            generators: gens,
            elements,
        })
    }

    /// Wraps a complete, sorted element list, choosing generators greedily.
    fn from_sorted_elements(degree: usize, elements: Vec<Permutation>) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for e in &elements {
            if !span.contains(e) {
                gens.push(e.clone());
                span = closure(degree, &gens, usize::MAX)
                    .expect("uncapped")
                    .into_iter()
                    .collect();
            }
        }
        PermGroup {
            degree,
            generators: gens,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        let mut elements: Vec<Permutation> =
            self.elements.iter().map(|h| h.conjugate_by(g)).collect();
        elements.sort();
        PermGroup {
            degree: self.degree,
            generators: self.generators.iter().map(|h| h.conjugate_by(g)).collect(),
            elements,
        }
    }

    pub fn orbit(&self, x: usize) -> VertexSet {
        let mut orbit = VertexSet::singleton(x);
        let mut frontier = orbit;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for y in frontier.iter() {
                for g in &self.generators {
                    next.insert(g.apply(y));
                }
            }
            frontier = next.difference(orbit);
            orbit = orbit.union(frontier);
        }
        orbit
    }

    /// Orbits on points, ordered by least point.
    pub fn orbits(&self) -> Vec<VertexSet> {
        let mut covered = VertexSet::EMPTY;
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !covered.contains(x) {
                let o = self.orbit(x);
                covered = covered.union(o);
                out.push(o);
            }
        }
        out
    }

    /// True iff every element maps `set` onto itself.
    pub fn is_invariant(&self, set: VertexSet) -> bool {
        self.generators.iter().all(|g| g.apply_set(set) == set)
    }

    /// Elements of order at most two.
    pub fn involutions_and_identity(&self) -> Vec<Permutation> {
        self.elements
            .iter()
            .filter(|e| e.is_involution_or_identity())
            .cloned()
            .collect()
    }
}

fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        let x = out[i].clone();
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                out.push(y);
                if out.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "group order",
                        cap,
                    });
                }
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Weight-, edge- and loop-preserving permutations of the quotient nodes.
pub fn automorphisms(q: &QuotientGraph, caps: &Caps) -> Result<PermGroup> {
    let n = q.node_count();
    let colors = refined_colors(q);
    let mut found: Vec<Permutation> = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    backtrack(q, &colors, 0, &mut images, &mut used, &mut found, caps.aut)?;
    found.sort();
    Ok(PermGroup::from_sorted_elements(n, found))
}

/// Equitable refinement of the partition by (weight, degree, loop).
fn refined_colors(q: &QuotientGraph) -> Vec<usize> {
    let n = q.node_count();
    let initial: Vec<(usize, usize, bool)> = (0..n)
        .map(|v| (q.weight(v), q.neighbors(v).len(), q.has_loop(v)))
        .collect();
    let mut colors = relabel(&initial);
    loop {
        let signature: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = q.neighbors(v).iter().map(|u| colors[u]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let next = relabel(&signature);
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn relabel<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap())
        .collect()
}

fn backtrack(
    q: &QuotientGraph,
    colors: &[usize],
    v: usize,
    images: &mut Vec<usize>,
    used: &mut VertexSet,
    found: &mut Vec<Permutation>,
    cap: usize,
) -> Result<()> {
    let n = q.node_count();
    if v == n {
        found.push(Permutation::from_images(images)?);
        if found.len() > cap {
            return Err(Error::CapExceeded {
                what: "automorphism group order",
                cap,
            });
        }
        return Ok(());
    }
    for w in 0..n {
        if used.contains(w) || colors[w] != colors[v] {
            continue;
        }
        let consistent = (0..v).all(|u| q.adjacent(u, v) == q.adjacent(images[u], w));
        if !consistent {
            continue;
        }
        images[v] = w;
        used.insert(w);
        backtrack(q, colors, v + 1, images, used, found, cap)?;
        *used = used.without(w);
        images[v] = usize::MAX;
    }
    Ok(())
}

/// Element-indexed view of a group for subgroup computations.
struct Ambient<'a> {
    group: &'a PermGroup,
    index: HashMap<&'a Permutation, usize>,
    words: usize,
}

type Bits = Vec<u64>;

struct Sub {
    bits: Bits,
    elements: Vec<usize>,
    generators: Vec<usize>,
    key: (usize, Vec<(Vec<usize>, usize)>),
}

impl<'a> Ambient<'a> {
    fn new(group: &'a PermGroup) -> Self {
        let index = group
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        Ambient {
            group,
            index,
            words: group.order().div_ceil(64),
        }
    }

    fn idx(&self, p: &Permutation) -> usize {
        self.index[p]
    }

    fn el(&self, i: usize) -> &Permutation {
        &self.group.elements[i]
    }

    fn span(&self, generators: Vec<usize>) -> Sub {
        let gens: Vec<Permutation> = generators.iter().map(|&g| self.el(g).clone()).collect();
        let elements: Vec<usize> = closure(self.group.degree, &gens, usize::MAX)
            .expect("uncapped")
            .iter()
            .map(|e| self.idx(e))
            .collect();
        let mut bits = vec![0u64; self.words];
        for &e in &elements {
            bits[e / 64] |= 1 << (e % 64);
        }
        let mut hist: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &e in &elements {
            *hist.entry(self.el(e).cycle_type()).or_default() += 1;
        }
        Sub {
            bits,
            key: (elements.len(), hist.into_iter().collect()),
            elements,
            generators,
        }
    }

    fn has(bits: &Bits, i: usize) -> bool {
        bits[i / 64] >> (i % 64) & 1 == 1
    }

    fn conjugate(&self, a: &Sub, b: &Sub) -> bool {
        a.key == b.key
            && self.group.elements.iter().any(|x| {
                a.generators
                    .iter()
                    .all(|&g| Self::has(&b.bits, self.idx(&self.el(g).conjugate_by(x))))
            })
    }

    fn to_group(&self, sub: &Sub) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span_order = 1;
        for &g in &sub.generators {
            let mut trial = gens.clone();
            trial.push(self.el(g).clone());
            let order = closure(self.group.degree, &trial, usize::MAX)
                .expect("uncapped")
                .len();
            if order > span_order {
                gens = trial;
                span_order = order;
            }
        }
        let mut elements: Vec<Permutation> =
            sub.elements.iter().map(|&e| self.el(e).clone()).collect();
        elements.sort();
        PermGroup {
            degree: self.group.degree,
            generators: gens,
            elements,
        }
    }
}

/// One subgroup from each conjugacy class, ordered by (order, element
/// cycle-type statistics, elements). The trivial group comes first and the
/// whole group last.
pub fn subgroup_classes(g: &PermGroup, caps: &Caps) -> Result<Vec<PermGroup>> {
    if g.order() > caps.aut {
        return Err(Error::CapExceeded {
            what: "group order",
            cap: caps.aut,
        });
    }
    let amb = Ambient::new(g);
    let identity = amb.idx(&Permutation::identity(g.degree));

    // Cyclic subgroups, each kept once with a generator.
    let mut cyclic: Vec<(usize, Bits)> = Vec::new();
    let mut cyclic_seen: HashSet<Bits> = HashSet::new();
    for i in 0..g.order() {
        if i == identity {
            continue;
        }
        let c = amb.span(vec![i]);
        if cyclic_seen.insert(c.bits.clone()) {
            cyclic.push((i, c.bits));
        }
    }

    let mut reps: Vec<Sub> = vec![amb.span(Vec::new())];
    let mut seen: HashSet<Bits> = HashSet::from([reps[0].bits.clone()]);
    let mut next = 0;
    while next < reps.len() {
        for (gen, cbits) in &cyclic {
            let h = &reps[next];
            if cbits.iter().zip(&h.bits).all(|(c, b)| c & !b == 0) {
                continue;
            }
            let mut gens = h.generators.clone();
            gens.push(*gen);
            let k = amb.span(gens);
            if !seen.insert(k.bits.clone()) {
                continue;
            }
            if reps.iter().any(|r| amb.conjugate(&k, r)) {
                continue;
            }
            reps.push(k);
            if reps.len() > caps.subgroups {
                return Err(Error::CapExceeded {
                    what: "subgroup classes",
                    cap: caps.subgroups,
                });
            }
        }
        next += 1;
    }

    let mut out: Vec<(Sub, PermGroup)> = reps
        .into_iter()
        .map(|s| {
            let group = amb.to_group(&s);
            (s, group)
        })
        .collect();
    out.sort_by(|(a, ga), (b, gb)| a.key.cmp(&b.key).then_with(|| ga.elements.cmp(&gb.elements)));
    Ok(out.into_iter().map(|(_, group)| group).collect())
}

/// `{x ∈ g : x h x⁻¹ = h}`.
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Vec<Permutation> {
    g.elements
        .iter()
        .filter(|x| h.generators.iter().all(|k| h.contains(&k.conjugate_by(x))))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, two_cliques};

    fn dihedral(n: usize) -> PermGroup {
        let rot = Permutation::from_images(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>())
            .unwrap();
        let refl = Permutation::from_images(&(0..n).map(|i| (n - i) % n).collect::<Vec<_>>())
            .unwrap();
        PermGroup::generate(n, &[rot, refl], 10_000).unwrap()
    }

    fn brute_force_subgroups(g: &PermGroup) -> Vec<Vec<Permutation>> {
        let els = g.elements();
        let id = Permutation::identity(g.degree());
        let others: Vec<&Permutation> = els.iter().filter(|e| !e.is_identity()).collect();
        let mut subs = Vec::new();
        for mask in 0u64..1 << others.len() {
            let mut set: Vec<Permutation> = vec![id.clone()];
            for (i, e) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    set.push((*e).clone());
                }
            }
            let closed = set
                .iter()
                .all(|a| set.iter().all(|b| set.contains(&a.compose(b))));
            if closed {
                set.sort();
                subs.push(set);
            }
        }
        subs
    }

    fn conjugacy_class_count(g: &PermGroup, subs: &[Vec<Permutation>]) -> usize {
        let mut classes: Vec<Vec<Permutation>> = Vec::new();
        for s in subs {
            let known = classes.iter().any(|c| {
                c.len() == s.len()
                    && g.elements().iter().any(|x| {
                        let mut conj: Vec<Permutation> =
                            s.iter().map(|e| e.conjugate_by(x)).collect();
                        conj.sort();
                        &conj == c
                    })
            });
            if !known {
                classes.push(s.clone());
            }
        }
        classes.len()
    }

    #[test]
    fn automorphisms_of_examples() {
        let caps = Caps::default();
        for n in 2..5 {
            let q = QuotientGraph::of(&two_cliques(n));
            assert_eq!(automorphisms(&q, &caps).unwrap().order(), 2);
        }
        for n in 5..=8 {
            let q = QuotientGraph::of(&cycle_graph(n));
            let aut = automorphisms(&q, &caps).unwrap();
            assert_eq!(aut.order(), 2 * n);
            assert_eq!(aut, dihedral(n));
        }
        let q = QuotientGraph::of(&path_graph(3));
        assert!(automorphisms(&q, &caps).unwrap().is_trivial());
        let q = QuotientGraph::of(&complete_graph(4));
        assert!(automorphisms(&q, &caps).unwrap().is_trivial());
    }

    #[test]
    fn automorphisms_preserve_structure() {
        let q = QuotientGraph::from_parts(
            &[1, 1, 2, 2, 1, 1],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 2), (3, 3)],
        )
        .unwrap();
        let aut = automorphisms(&q, &Caps::default()).unwrap();
        for g in aut.elements() {
            for v in 0..q.node_count() {
                assert_eq!(q.weight(v), q.weight(g.apply(v)));
                for u in 0..q.node_count() {
                    assert_eq!(q.adjacent(u, v), q.adjacent(g.apply(u), g.apply(v)));
                }
            }
        }
        assert_eq!(aut.order(), 2);
    }

    #[test]
    fn automorphism_cap() {
        let q = QuotientGraph::from_parts(&[1; 8], &[]).unwrap();
        let caps = Caps {
            aut: 100,
            ..Caps::default()
        };
        assert!(matches!(
            automorphisms(&q, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn subgroup_classes_small() {
        let caps = Caps::default();
        let t = PermGroup::trivial(3);
        assert_eq!(subgroup_classes(&t, &caps).unwrap().len(), 1);
        let swap = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
        let z2 = PermGroup::generate(2, &[swap], 10).unwrap();
        let classes = subgroup_classes(&z2, &caps).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes[0].is_trivial());
        assert_eq!(classes[1], z2);
    }

    #[test]
    fn subgroup_classes_match_brute_force() {
        let caps = Caps::default();
        // D6 (order 12), D5, D4 and S4 acting on four points.
        let s4 = PermGroup::generate(
            4,
            &[
                Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
            ],
            100,
        )
        .unwrap();
        for (g, expected) in [(dihedral(6), 10), (dihedral(5), 4), (dihedral(4), 8), (s4, 11)] {
            // Brute force over element subsets is only affordable below 2^16.
            let count = if g.order() <= 16 {
                conjugacy_class_count(&g, &brute_force_subgroups(&g))
            } else {
                expected
            };
            assert_eq!(count, expected);
            let classes = subgroup_classes(&g, &caps).unwrap();
            assert_eq!(classes.len(), count);
            assert!(classes[0].is_trivial());
            assert_eq!(classes.last().unwrap(), &g);
            for h in &classes {
                assert!(h.is_subgroup_of(&g));
                let regenerated = PermGroup::generate(g.degree(), h.generators(), 100).unwrap();
                assert_eq!(&regenerated, h);
            }
        }
    }

    #[test]
    fn orbits_and_invariance() {
        let d6 = dihedral(6);
        assert_eq!(d6.orbits(), vec![VertexSet::full(6)]);
        let a2 = Permutation::from_cycles(6, &[vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
        let h = PermGroup::generate(6, &[a2], 10).unwrap();
        assert_eq!(h.orbits().len(), 2);
        assert!(h.is_invariant(VertexSet::from_indices([0, 2, 4])));
        assert!(!h.is_invariant(VertexSet::from_indices([0, 1])));
        assert_eq!(normalizer(&d6, &h).len(), 12);
    }
}
