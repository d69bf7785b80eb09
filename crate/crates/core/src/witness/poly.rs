//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// `c X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPolynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(num/den)` for `den > 0`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> Sign {
        debug_assert!(den.is_positive());
        // Σ c_i num^i den^(d-i), evaluated Horner-style.
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// `X^deg · p(1/X)`.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPolynomial::new(c)
    }

    /// Largest `k` with `X^k` dividing `p`, and `p / X^k`.
    pub fn split_x_power(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, IntPolynomial::new(self.coeffs[k..].to_vec()))
    }

    /// `lc(d)^(deg p - deg d + 1) · p mod d`.
    pub fn pseudo_remainder(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading();
        let mut r = self.clone();
        let Some(dp) = r.degree() else {
            return r;
        };
        if dp < dd {
            return r;
        }
        let mut steps = dp - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = IntPolynomial::monomial(r.leading(), dr - dd);
            r = &r.scale(&lc) - &(&t * d);
            steps -= 1;
        }
        r.scale(&num_traits::pow(lc, steps))
    }

    /// Exact quotient over the integers, if `d` divides `self`.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        let lc = d.leading();
        let mut r = self.clone();
        let Some(dp) = r.degree() else {
            return Some(IntPolynomial::zero());
        };
        if dp < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); dp - dd + 1];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (quot, rem) = r.leading().div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            let t = IntPolynomial::monomial(quot.clone(), dr - dd);
            q[dr - dd] = quot;
            r = &r - &(&t * d);
        }
        Some(IntPolynomial::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// Primitive square-free part.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides")
            .primitive_part()
    }

    pub fn pow(&self, mut k: u32) -> IntPolynomial {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(big_to_json).collect())
    }
}

/// Exact JSON number for an arbitrary-precision integer.
pub fn big_to_json(x: &BigInt) -> serde_json::Value {
    serde_json::from_str(&x.to_string()).expect("integers are valid JSON numbers")
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, -2, 1]).to_string(), "X^2 - 2X - 1");
        assert_eq!(p(&[1, 0, 0, -3]).to_string(), "-3X^3 + 1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, 1]).to_string(), "X");
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&(&a * &b) - &p(&[-1, 0, 1]), IntPolynomial::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[-1, 0, 1]).div_exact(&b), Some(a.clone()));
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), None);
        assert_eq!(p(&[3, 2, 1]).derivative(), p(&[2, 2]));
        assert_eq!(p(&[1, 2, 3]).reciprocal(), p(&[3, 2, 1]));
        assert_eq!(p(&[0, 0, 1, 2]).split_x_power(), (2, p(&[1, 2])));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[1, 1]);
        let b = p(&[-2, 1]);
        let c = p(&[1, 0, 1]);
        let x = &(&a * &a) * &c;
        let y = &(&a * &b).scale(&BigInt::from(6)) * &c;
        assert_eq!(x.gcd(&y), &a * &c);
        assert_eq!((&x * &b).squarefree_part(), &(&a * &b) * &c);
        assert_eq!(p(&[-4, -6]).primitive_part(), p(&[2, 3]));
    }

    #[test]
    fn signs_at_rationals() {
        let q = p(&[-1, 0, 2]); // 2X^2 - 1
        let s = |n: i64, d: i64| q.sign_at(&BigInt::from(n), &BigInt::from(d));
        assert_eq!(s(1, 2), Sign::Minus);
        assert_eq!(s(3, 4), Sign::Plus);
        assert_eq!(s(-3, 4), Sign::Plus);
        assert_eq!(p(&[-1, 2]).sign_at(&BigInt::from(1), &BigInt::from(2)), Sign::NoSign);
    }
}
