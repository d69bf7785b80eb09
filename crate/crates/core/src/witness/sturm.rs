//! Real root counting with Sturm sequences, and the unit-circle test.

use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sturm sequence of a square-free polynomial, kept primitive. Each
/// remainder is rescaled by a positive factor only, so sign patterns are
/// those of the classical sequence.
pub fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return chain;
    }
    chain.push(p.derivative());
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let mut r = a.pseudo_remainder(b);
        // prem = lc(b)^(delta+1) · rem; undo a negative factor.
        let factor_negative = b.leading().is_negative() && delta % 2 == 0;
        if !factor_negative {
            r = -&r;
        }
        if r.is_zero() {
            break;
        }
        let c = r.content();
        r = IntPolynomial::new(r.coeffs().iter().map(|x| x / &c).collect());
        chain.push(r);
    }
    chain
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in signs.filter(|s| *s != Sign::NoSign) {
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[IntPolynomial], x: &BigRational) -> usize {
    variations(chain.iter().map(|p| p.sign_at(x.numer(), x.denom())))
}

fn sign_at_infinity(p: &IntPolynomial, negative: bool) -> Sign {
    let s = p.leading().sign();
    if negative && p.degree().unwrap_or(0) % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &IntPolynomial) -> usize {
    let q = p.squarefree_part();
    let chain = sturm_chain(&q);
    variations(chain.iter().map(|c| sign_at_infinity(c, true)))
        - variations(chain.iter().map(|c| sign_at_infinity(c, false)))
}

/// Number of distinct real roots in the closed interval `[lo, hi]`.
pub fn count_roots_in(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> usize {
    if lo > hi {
        return 0;
    }
    let q = p.squarefree_part();
    let chain = sturm_chain(&q);
    let at_lo = usize::from(q.sign_at(lo.numer(), lo.denom()) == Sign::NoSign);
    variations_at(&chain, lo) - variations_at(&chain, hi) + at_lo
}

/// Cauchy bound: every root has absolute value below this integer.
pub fn root_bound(p: &IntPolynomial) -> BigInt {
    let lc = p.leading().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    max / lc + 2
}

/// Disjoint rational intervals `[lo, hi]`, ascending, each containing
/// exactly one real root of `p`.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<(BigRational, BigRational)> {
    let q = p.squarefree_part();
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(&q);
    let b = BigRational::from_integer(root_bound(&q));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    // Roots in the half-open (lo, hi]; bounds are never roots at the top.
    while let Some((lo, hi)) = stack.pop() {
        let n = variations_at(&chain, &lo) - variations_at(&chain, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort();
    out
}

/// Narrows an isolating interval of a simple root of the square-free `q`
/// to width at most `2^-bits`.
pub fn refine_root(
    q: &IntPolynomial,
    mut lo: BigRational,
    mut hi: BigRational,
    bits: u32,
) -> (BigRational, BigRational) {
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let sign = |x: &BigRational| q.sign_at(x.numer(), x.denom());
    if sign(&hi) == Sign::NoSign {
        return (hi.clone(), hi);
    }
    let s_hi = sign(&hi);
    while &hi - &lo > width {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        match sign(&mid) {
            Sign::NoSign => return (mid.clone(), mid),
            s if s == s_hi => hi = mid,
            _ => lo = mid,
        }
    }
    (lo, hi)
}

/// True iff the constant coefficient of a monic polynomial is ±1.
pub fn is_integer_like(p: &IntPolynomial) -> Result<bool> {
    if !p.is_monic() {
        return Err(Error::InvalidInput(format!("{p} is not monic")));
    }
    Ok(p.coeff(0).abs().is_one())
}

/// Data behind a hyperbolicity verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicityProof {
    pub hyperbolic: bool,
    pub root_at_one: bool,
    pub root_at_minus_one: bool,
    /// `gcd(p, reciprocal(p))` after removing `X`, `X - 1` and `X + 1`
    /// factors; every unit-circle root of `p` is a root of it.
    pub reciprocal_part: IntPolynomial,
    /// Its image under `X + 1/X`.
    pub trace_polynomial: IntPolynomial,
    /// Real roots of the trace polynomial in `[-2, 2]`.
    pub sturm_count: usize,
}

/// `T` with `s(X) = X^k T(X + 1/X)` for a palindromic `s` of degree `2k`.
fn trace_polynomial(s: &IntPolynomial) -> IntPolynomial {
    let k = s.degree().unwrap() / 2;
    let y = IntPolynomial::from_i64s(&[0, 1]);
    let mut d_prev = IntPolynomial::from_i64s(&[2]);
    let mut d = y.clone();
    let mut t = IntPolynomial::constant(s.coeff(k));
    for j in 1..=k {
        t = &t + &d.scale(&s.coeff(k + j));
        let next = &(&y * &d) - &d_prev;
        d_prev = d;
        d = next;
    }
    t
}

/// Decides whether `p` has no complex root of absolute value one.
pub fn hyperbolicity(p: &IntPolynomial) -> Result<HyperbolicityProof> {
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    let (_, mut p) = p.split_x_power();
    let one = BigInt::one();
    let root_at_one = p.eval(&one).is_zero();
    let root_at_minus_one = p.eval(&-one).is_zero();
    for r in [1i64, -1] {
        let lin = IntPolynomial::from_i64s(&[-r, 1]);
        while p.eval(&BigInt::from(r)).is_zero() {
            p = p.div_exact(&lin).expect("root gives a linear factor");
        }
    }
    let s = p.gcd(&p.reciprocal());
    let (trace, sturm_count) = if s.degree().unwrap_or(0) == 0 {
        (IntPolynomial::one(), 0)
    } else {
        debug_assert_eq!(s.degree().unwrap() % 2, 0);
        debug_assert!(s == s.reciprocal() || s == -&s.reciprocal());
        let t = trace_polynomial(&s);
        let two = BigRational::from_integer(2.into());
        let count = count_roots_in(&t, &-two.clone(), &two);
        (t, count)
    };
    Ok(HyperbolicityProof {
        hyperbolic: !root_at_one && !root_at_minus_one && sturm_count == 0,
        root_at_one,
        root_at_minus_one,
        reciprocal_part: s,
        trace_polynomial: trace,
        sturm_count,
    })
}

pub fn is_hyperbolic(p: &IntPolynomial) -> Result<bool> {
    Ok(hyperbolicity(p)?.hyperbolic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn root_counts() {
        let cubic = p(&[1, -2, -1, 1]); // X^3 - X^2 - 2X + 1
        assert_eq!(count_real_roots(&cubic), 3);
        assert_eq!(count_real_roots(&p(&[1, 0, 1])), 0);
        assert_eq!(count_real_roots(&p(&[-1, 0, 1]).pow(2)), 2);
        assert_eq!(count_roots_in(&p(&[-1, 0, 1]), &q(-1, 1), &q(1, 1)), 2);
        assert_eq!(count_roots_in(&p(&[-1, 0, 1]), &q(-1, 2), &q(1, 1)), 1);
        assert_eq!(count_roots_in(&p(&[-1, 0, 1]), &q(-1, 2), &q(1, 2)), 0);
        assert_eq!(count_roots_in(&p(&[2, 0, -1]), &q(-2, 1), &q(2, 1)), 2);
        let sextic = &(&p(&[-2, 0, 1]) * &p(&[-3, 0, 1])) * &p(&[-5, 0, 1]);
        assert_eq!(count_real_roots(&sextic), 6);
        assert_eq!(isolate_real_roots(&sextic).len(), 6);
    }

    #[test]
    fn isolation_and_refinement() {
        let f = p(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        let (lo, hi) = refine_root(&f, roots[1].0.clone(), roots[1].1.clone(), 40);
        assert!(lo < q(1_414_214, 1_000_000) && hi > q(1_414_213, 1_000_000));
        assert!(&hi - &lo <= q(1, 1 << 40));
    }

    #[test]
    fn hyperbolicity_fixtures() {
        assert!(is_hyperbolic(&p(&[1, -3, 1])).unwrap());
        assert!(!is_hyperbolic(&p(&[1, -1, 1])).unwrap());
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let proof = hyperbolicity(&lehmer).unwrap();
        assert!(!proof.hyperbolic);
        assert_eq!(proof.sturm_count, 4);
        assert!(!is_hyperbolic(&p(&[-1, 1])).unwrap());
        assert!(!is_hyperbolic(&p(&[1, 1])).unwrap());
        assert!(is_hyperbolic(&p(&[0, 0, 1, -3, 1])).unwrap());
        assert!(is_hyperbolic(&p(&[5])).unwrap());
        assert!(is_hyperbolic(&p(&[-1, -2, 1])).unwrap());
        // Reciprocal but hyperbolic: (X^2 - 3X + 1)(X^2 - 4X + 1).
        assert!(is_hyperbolic(&(&p(&[1, -3, 1]) * &p(&[1, -4, 1]))).unwrap());
        // Roots on the unit circle with multiplicity.
        assert!(!is_hyperbolic(&p(&[1, 0, 1]).pow(3)).unwrap());
        assert!(is_hyperbolic(&IntPolynomial::zero()).is_err());
        for n in 1..=24u32 {
            let cyclotomic_multiple = &p(&[-1]) + &IntPolynomial::monomial(1.into(), n as usize);
            assert!(!is_hyperbolic(&cyclotomic_multiple).unwrap());
        }
    }

    #[test]
    fn integer_like() {
        assert!(is_integer_like(&p(&[1, -3, 1])).unwrap());
        assert!(!is_integer_like(&p(&[2, -3, 1])).unwrap());
        assert!(is_integer_like(&p(&[-1, 1])).unwrap());
        assert!(is_integer_like(&p(&[1, 2])).is_err());
    }

    #[test]
    fn trace_polynomial_of_palindromes() {
        // X^4 + 1 = X^2 (Y^2 - 2).
        assert_eq!(trace_polynomial(&p(&[1, 0, 0, 0, 1])), p(&[-2, 0, 1]));
        // X^2 - 3X + 1 = X (Y - 3).
        assert_eq!(trace_polynomial(&p(&[1, -3, 1])), p(&[-3, 1]));
    }
}
