//! Shared fixtures for the integration tests: the graph corpus, exhaustive
//! trees, and an independent numerical root-modulus oracle.

#![allow(dead_code)]

use anosov_core::graph::{
    complete_bipartite, complete_graph, cycle_graph, empty_graph, graph_from_mask, path_graph,
    star_graph, two_cliques,
};
use anosov_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub const CORPUS_SEED: u64 = 0x5eed_c0de;

/// `count` random graphs on 1..=`max_n` vertices, edge densities spread
/// over (0, 1).
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = rng.gen_range(0.1..0.9);
            let pairs = n * (n - 1) / 2;
            let mut mask = 0u64;
            for bit in 0..pairs {
                if rng.gen_bool(p) {
                    mask |= 1 << bit;
                }
            }
            graph_from_mask(n, mask)
        })
        .collect()
}

/// Named families up to seven vertices followed by 200 random graphs.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=7 {
        out.push((format!("path{n}"), path_graph(n)));
        out.push((format!("complete{n}"), complete_graph(n)));
        out.push((format!("empty{n}"), empty_graph(n)));
        if n >= 3 {
            out.push((format!("cycle{n}"), cycle_graph(n)));
        }
        if n >= 2 {
            out.push((format!("star{n}"), star_graph(n)));
        }
    }
    for n in 1..=3 {
        out.push((format!("bipartite{n}"), complete_bipartite(n)));
        out.push((format!("cliques{n}"), two_cliques(n)));
    }
    for (i, g) in random_graphs(CORPUS_SEED, 200, 7).into_iter().enumerate() {
        out.push((format!("random{i}"), g));
    }
    out
}

/// Canonical string of a rooted tree (children sorted).
fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_code(adj, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism-invariant code of an unrooted tree, rooted at its center.
fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for m in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..m {
                let mut e = t.clone();
                e.push((v, m));
                if seen.insert(tree_code(m + 1, &e)) {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|edges| {
            let names = (1..=n).map(|i| format!("v{i}")).collect();
            Graph::new(names, &edges).unwrap()
        })
        .collect()
}

pub mod roots {
    //! Root moduli from an f64 Durand-Kerner start refined by Newton steps
    //! in BigInt fixed point. Shares no code with the exact tester.

    use num_bigint::BigInt;
    use num_complex::Complex64;
    use num_rational::BigRational;
    use num_traits::{One, Signed, ToPrimitive, Zero};

    /// Exact gcd over the rationals by the plain Euclidean algorithm.
    fn rat_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let trim = |mut v: Vec<BigRational>| {
            while v.last().is_some_and(Zero::is_zero) {
                v.pop();
            }
            v
        };
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let mut r = a.clone();
            while r.len() >= b.len() {
                let q = r.last().unwrap() / b.last().unwrap();
                let shift = r.len() - b.len();
                for (i, x) in b.iter().enumerate() {
                    r[i + shift] -= &q * x;
                }
                r.pop();
                r = trim(r);
            }
            a = b;
            b = r;
        }
        a
    }

    /// Monic squarefree part of `p` with the zero roots removed.
    fn squarefree(p: &[i64]) -> Vec<BigRational> {
        let mut c: Vec<BigRational> = p.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        while c.first().is_some_and(Zero::is_zero) {
            c.remove(0);
        }
        if c.len() <= 1 {
            return c;
        }
        let d: Vec<BigRational> = c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| x * BigRational::from_integer(i.into()))
            .collect();
        let g = rat_gcd(&c, &d);
        // c / g by long division.
        let mut r = c.clone();
        let mut q = vec![BigRational::zero(); c.len() - g.len() + 1];
        for k in (0..q.len()).rev() {
            let coef = &r[k + g.len() - 1] / g.last().unwrap();
            for (i, x) in g.iter().enumerate() {
                r[k + i] -= &coef * x;
            }
            q[k] = coef;
        }
        let lead = q.last().unwrap().clone();
        q.iter().map(|x| x / &lead).collect()
    }

    fn durand_kerner(p: &[f64]) -> Vec<Complex64> {
        let n = p.len() - 1;
        let eval = |z: Complex64| p.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a);
        let bound = 1.0 + p[..n].iter().map(|a| a.abs()).fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| Complex64::from_polar(bound.min(2.0) * 0.9, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect();
        for _ in 0..2000 {
            let mut moved = 0.0f64;
            for i in 0..n {
                let mut den = Complex64::one();
                for j in 0..n {
                    if i != j {
                        den *= z[i] - z[j];
                    }
                }
                let step = eval(z[i]) / den;
                z[i] -= step;
                moved = moved.max(step.norm());
            }
            if moved < 1e-14 {
                break;
            }
        }
        z
    }

    /// Complex number in fixed point: value = (re + i·im) / 2^bits.
    #[derive(Clone)]
    struct Fixed {
        re: BigInt,
        im: BigInt,
    }

    struct Ctx {
        bits: u64,
    }

    impl Ctx {
        fn fixed_of_f64(&self, z: Complex64) -> Fixed {
            let scale = |x: f64| {
                let (m, e) = ((x * (1u64 << 52) as f64).round() as i64, 52u64);
                BigInt::from(m) << self.bits >> e
            };
            Fixed { re: scale(z.re), im: scale(z.im) }
        }

        fn fixed_of_rat(&self, x: &BigRational) -> BigInt {
            ((x.numer() << self.bits) / x.denom()).clone()
        }

        fn mul(&self, a: &Fixed, b: &Fixed) -> Fixed {
            Fixed {
                re: (&a.re * &b.re - &a.im * &b.im) >> self.bits,
                im: (&a.re * &b.im + &a.im * &b.re) >> self.bits,
            }
        }

        fn div(&self, a: &Fixed, b: &Fixed) -> Fixed {
            let den = &b.re * &b.re + &b.im * &b.im;
            let re = (&a.re * &b.re + &a.im * &b.im) << self.bits;
            let im = (&a.im * &b.re - &a.re * &b.im) << self.bits;
            Fixed { re: re / &den, im: im / den }
        }

        fn eval(&self, p: &[BigInt], z: &Fixed) -> (Fixed, Fixed) {
            let zero = Fixed { re: BigInt::zero(), im: BigInt::zero() };
            let (mut v, mut d) = (zero.clone(), zero);
            for a in p.iter().rev() {
                d = self.mul(&d, z);
                d.re += &v.re;
                d.im += &v.im;
                v = self.mul(&v, z);
                v.re += a;
            }
            (v, d)
        }

        /// `log2 ||z|^2 - 1|`, to within one; `-inf` when it vanishes at
        /// this precision.
        fn log2_gap(&self, z: &Fixed) -> f64 {
            let m = (&z.re * &z.re + &z.im * &z.im) >> self.bits;
            let gap = m - (BigInt::one() << self.bits);
            if gap.is_zero() {
                f64::NEG_INFINITY
            } else {
                gap.bits() as f64 - self.bits as f64
            }
        }
    }

    /// `log2 ||r|^2 - 1|` for the distinct nonzero roots of `p`, refined at
    /// `bits` of fixed-point precision.
    fn gaps(p: &[BigRational], bits: u64) -> Option<Vec<f64>> {
        let n = p.len() - 1;
        let ctx = Ctx { bits };
        let approx = durand_kerner(&p.iter().map(|x| x.to_f64().unwrap()).collect::<Vec<_>>());
        let coeffs: Vec<BigInt> = p.iter().map(|x| ctx.fixed_of_rat(x)).collect();
        let tol = BigInt::one() << (bits / 2);
        let mut refined: Vec<Fixed> = Vec::with_capacity(n);
        for z0 in approx {
            let mut z = ctx.fixed_of_f64(z0);
            for _ in 0..200 {
                let (v, d) = ctx.eval(&coeffs, &z);
                if d.re.is_zero() && d.im.is_zero() {
                    return None;
                }
                let step = ctx.div(&v, &d);
                z.re -= &step.re;
                z.im -= &step.im;
                if step.re.abs() < BigInt::from(16) && step.im.abs() < BigInt::from(16) {
                    break;
                }
            }
            refined.push(z);
        }
        // Newton from nearby starts can collapse two roots into one.
        for i in 0..n {
            for j in 0..i {
                let dr = (&refined[i].re - &refined[j].re).abs();
                let di = (&refined[i].im - &refined[j].im).abs();
                if dr < tol && di < tol {
                    return None;
                }
            }
        }
        Some(refined.iter().map(|z| ctx.log2_gap(z)).collect())
    }

    /// Precision ladder. A modulus within `SUSPECT` of 1 at the first rung
    /// is escalated; at the last rung a root counts as on the circle when
    /// `||r|^2 - 1| < 2^-(bits/4)`.
    pub const LADDER: [u64; 2] = [256, 1024];
    pub const SUSPECT: f64 = 1e-20;

    /// Numerical verdict: true iff no root of modulus one.
    pub fn numerically_hyperbolic(p: &[i64]) -> Result<bool, String> {
        let sf = squarefree(p);
        if sf.len() <= 1 {
            return Ok(true);
        }
        let suspect = SUSPECT.log2();
        for (rung, bits) in LADDER.into_iter().enumerate() {
            let g = gaps(&sf, bits)
                .ok_or_else(|| format!("root refinement failed for {p:?} at {bits} bits"))?;
            if g.iter().all(|&x| x >= suspect) {
                return Ok(true);
            }
            if rung + 1 == LADDER.len() {
                let on_circle = -(bits as f64) / 4.0;
                return Ok(g.iter().all(|&x| x >= on_circle));
            }
        }
        unreachable!()
    }
}
